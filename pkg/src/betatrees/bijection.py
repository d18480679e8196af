"""From labeled trees to rooted non-separable planar maps, and back by lookup.

Each leaf becomes a one-edge map whose root vertex is marked R and whose
other vertex is marked *.  At an internal node the children's maps are
glued left to right, * to R; a new root edge runs from the rightmost * to
the leftmost R, and the node's label selects the next * as the label-th
vertex along the new root face, walking counterclockwise from R.  A tree
with n nodes maps to a map with n edges whose root-face degree exceeds the
root label by one.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .fixed_points import iter_fixed
from .maps import RootedMap, canonical_code, is_self_dual
from .tree import BetaTree, GENERATION_BUDGET, generate_all


def _partner(d: int) -> int:
    """Edge pairing for darts allocated in consecutive pairs (1,2), (3,4), ..."""
    return d + 1 if d % 2 == 1 else d - 1


class _Builder:
    """Mutable rotation system under construction; darts appear in pairs."""

    def __init__(self):
        self.sigma: dict[int, int] = {}
        self.pred: dict[int, int] = {}
        self.next_dart = 1

    def new_edge(self) -> tuple[int, int]:
        p = self.next_dart
        self.next_dart += 2
        return p, p + 1

    def isolated(self, d: int) -> None:
        self.sigma[d] = d
        self.pred[d] = d

    def insert_before(self, anchor: int, new: int) -> None:
        """Place ``new`` into the face corner just clockwise of ``anchor``."""
        before = self.pred[anchor]
        self.sigma[before] = new
        self.pred[new] = before
        self.sigma[new] = anchor
        self.pred[anchor] = new

    def merge(self, star: int, root: int) -> None:
        """Identify the vertex under ``star`` with the vertex under ``root``.

        The rotation at the second vertex, opened at the corner before its
        root dart, is spliced into the corner before ``star``.
        """
        before_star = self.pred[star]
        before_root = self.pred[root]
        self.sigma[before_star] = root
        self.pred[root] = before_star
        self.sigma[before_root] = star
        self.pred[star] = before_root

    def face_step(self, d: int) -> int:
        return self.sigma[_partner(d)]


def tree_to_map(t: BetaTree) -> RootedMap:
    """Build the rooted planar map of a valid tree."""
    builder = _Builder()
    root, _ = _assemble(t, builder)
    count = builder.next_dart - 1
    alpha = (0,) + tuple(_partner(d) for d in range(1, count + 1))
    sigma = (0,) + tuple(builder.sigma[d] for d in range(1, count + 1))
    return RootedMap(alpha, sigma, root)


def _assemble(node: BetaTree, builder: _Builder) -> tuple[int, int]:
    """Return (root dart, marked star dart) of the map built for ``node``."""
    if not node.children:
        p, q = builder.new_edge()
        builder.isolated(p)
        builder.isolated(q)
        return p, q
    pieces = [_assemble(child, builder) for child in node.children]
    leftmost_root = pieces[0][0]
    star = pieces[0][1]
    for piece_root, piece_star in pieces[1:]:
        builder.merge(star, piece_root)
        star = piece_star
    p, q = builder.new_edge()
    builder.insert_before(star, p)
    builder.insert_before(leftmost_root, q)
    marker = p
    for _ in range(node.label):
        marker = builder.face_step(marker)
    return p, marker


# ---------------------------------------------------------------------------
# Inverse by lookup, and the fixed-point observation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _preimages(edge_count: int) -> dict[tuple[int, ...], BetaTree]:
    return {
        canonical_code(tree_to_map(t)): t for t in generate_all(edge_count)
    }


def map_to_tree(m: RootedMap) -> BetaTree:
    """The unique tree mapping to ``m`` (rooted-isomorphically).

    Works by canonical-code lookup over all trees with as many nodes as
    ``m`` has edges; anything outside the non-separable image class raises.
    """
    n = m.edge_count
    if n > GENERATION_BUDGET:
        raise ValueError(
            f"edge count {n} exceeds the enumeration budget {GENERATION_BUDGET}"
        )
    tree = _preimages(n).get(canonical_code(m))
    if tree is None:
        raise ValueError("no preimage: the map is not the image of any valid tree")
    return tree


def witness_noncorrespondence(max_nodes: int) -> Optional[BetaTree]:
    """A fixed tree whose map image is not self-dual, if one exists.

    Scans fixed trees with 4 to ``max_nodes`` nodes (even sizes) and returns
    the first whose image fails self-duality, or ``None`` when the scan
    range is empty or exhausted.
    """
    for n in range(4, max_nodes + 1, 2):
        for tree in iter_fixed(n):
            if not is_self_dual(tree_to_map(tree)):
                return tree
    return None
