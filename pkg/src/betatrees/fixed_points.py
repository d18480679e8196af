"""Fixed points of the involution: structure, builders, enumeration, counting.

Every fixed tree is either the single node (F0), built from one arbitrary
tree by hanging its relabeled image to the right of its own root (F1), or
built from a tree, a smaller fixed tree, and a graft position (F2).  Apart
from the single node there are no fixed trees of odd size, and the number
with ``2n`` nodes is ``comb(3n - 2, n - 1) / n``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .involution import h
from .tree import BetaTree, LEAF, iter_trees


@dataclass(frozen=True)
class F0:
    """The single-node fixed tree."""


@dataclass(frozen=True)
class F1:
    """Fixed tree built from one arbitrary tree ``a``."""

    a: BetaTree


@dataclass(frozen=True)
class F2:
    """Fixed tree built from a tree ``a1``, a fixed tree ``a2``, and ``b >= 2``."""

    a1: BetaTree
    a2: BetaTree
    b: int


FixedPointStructure = Union[F0, F1, F2]


def is_fixed(t: BetaTree) -> bool:
    """Whether the involution maps ``t`` to itself, structurally."""
    return h(t) == t


def build_f1(a: BetaTree) -> BetaTree:
    """Hang the image of ``a``, its root relabeled to 1, to the right of ``a``.

    The result's root label is re-derived from the sum rule; the result is
    fixed and has twice as many nodes as ``a``.
    """
    hung = BetaTree(1, h(a).children)
    label = (a.label if a.children else 0) + 1
    return BetaTree(label, a.children + (hung,))


def build_f2(a1: BetaTree, a2: BetaTree, b: int) -> BetaTree:
    """Combine a tree, a smaller fixed tree, and a graft position.

    The image of ``a1`` is hung, root relabeled to 1, below the node at
    position ``b - 1`` on the rightmost path of ``a2`` (the root being
    position 1); the non-root path nodes at positions 2..b-1 gain 1 and the
    root label becomes ``b``.  The adjusted tree then hangs to the right of
    ``a1``'s root, whose label is re-derived from the sum rule.
    """
    if b < 2:
        raise ValueError(f"graft position must satisfy b >= 2, got {b}")
    if a2.size < 2:
        raise ValueError("the fixed component must have at least two nodes")
    if not is_fixed(a2):
        raise ValueError("the second component is not a fixed tree")
    if a2.label < b - 1:
        raise ValueError(
            f"root label {a2.label} of the fixed component is below b - 1 = {b - 1}"
        )
    return _assemble_f2(a1, BetaTree(1, h(a1).children), a2, b)


def _assemble_f2(a1: BetaTree, relabeled_image: BetaTree, a2: BetaTree, b: int) -> BetaTree:
    adjusted = _graft(a2, relabeled_image, b)
    label = (a1.label if a1.children else 0) + b
    return BetaTree(label, a1.children + (adjusted,))


def _graft(a2: BetaTree, grafted: BetaTree, b: int) -> BetaTree:
    # Walk to position b-1 on the rightmost path (root = position 1), hang
    # the graft there, then rebuild upwards bumping the non-root labels.
    spine = []
    node = a2
    for _ in range(b - 2):
        spine.append(node)
        node = node.children[-1]
    out = BetaTree(b if b == 2 else node.label + 1, node.children + (grafted,))
    for idx in range(b - 3, -1, -1):
        parent = spine[idx]
        out = BetaTree(
            b if idx == 0 else parent.label + 1, parent.children[:-1] + (out,)
        )
    return out


def rebuild(structure: FixedPointStructure) -> BetaTree:
    """The fixed tree described by a structure value."""
    if isinstance(structure, F0):
        return LEAF
    if isinstance(structure, F1):
        return build_f1(structure.a)
    return build_f2(structure.a1, structure.a2, structure.b)


def classify(t: BetaTree) -> FixedPointStructure:
    """Recover the unique structure of a fixed tree.

    The candidate is read off the shape (rightmost subtree's root label 1
    means F1, anything larger means F2 with that label as ``b``) and then
    verified by rebuilding, so any misclassification fails loudly.
    """
    if not is_fixed(t):
        raise ValueError("not a fixed point")
    if t.size == 1:
        return F0()
    last = t.children[-1]
    rest = t.children[:-1]
    a1 = BetaTree(sum(c.label for c in rest), rest) if rest else LEAF
    if last.label == 1:
        candidate: FixedPointStructure = F1(a1)
    else:
        candidate = F2(a1, _ungraft(last, last.label), last.label)
    if rebuild(candidate) != t:
        raise ValueError(f"fixed tree does not match any structure: {t}")
    return candidate


def _ungraft(adjusted: BetaTree, b: int, pos: int = 1) -> BetaTree:
    """Inverse of ``_graft``: drop the grafted subtree and undo the label shifts."""
    if pos == b - 1:
        kids = adjusted.children[:-1]
    else:
        if not adjusted.children:
            raise ValueError("rightmost path too short for the recorded position")
        kids = adjusted.children[:-1] + (_ungraft(adjusted.children[-1], b, pos + 1),)
    if pos == 1:
        return BetaTree(sum(c.label for c in kids) if kids else 1, kids)
    return BetaTree(adjusted.label - 1, kids)


def count_fixed(n: int) -> int:
    """Exact number of fixed trees with ``2n`` nodes."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    numerator = math.comb(3 * n - 2, n - 1)
    assert numerator % n == 0
    return numerator // n


def enumerate_fixed(n: int) -> Iterator[BetaTree]:
    """Yield every fixed tree with ``n`` nodes, built from its structure.

    Odd ``n`` (other than the out-of-range single node) admits no fixed
    trees: the stream is empty and a diagnostic warning is emitted.
    """
    if n < 2:
        raise ValueError(f"node count must be at least 2, got {n}")
    if n % 2 == 1:
        warnings.warn(
            f"no fixed trees exist on an odd number of nodes ({n})", stacklevel=2
        )
        return
    yield from iter_fixed(n)


#: Largest size whose fixed trees are memoized; larger sizes stream.
_CACHE_LIMIT = 18


def iter_fixed(n: int) -> Iterator[BetaTree] | tuple[BetaTree, ...]:
    """Fixed trees with ``n`` (even, >= 2) nodes; cached for small sizes."""
    if n <= _CACHE_LIMIT:
        return _fixed_trees(n)
    return _stream_fixed(n)


def _stream_fixed(n: int) -> Iterator[BetaTree]:
    for a in iter_trees(n // 2):
        yield build_f1(a)
    for size1 in range(1, (n - 2) // 2 + 1):
        pool = _fixed_trees(n - 2 * size1)
        for a1 in iter_trees(size1):
            relabeled = BetaTree(1, h(a1).children)
            for a2 in pool:
                for b in range(2, a2.label + 2):
                    yield _assemble_f2(a1, relabeled, a2, b)


@lru_cache(maxsize=None)
def _fixed_trees(n: int) -> tuple[BetaTree, ...]:
    return tuple(_stream_fixed(n))
