"""Reflection censuses for three tree families counted by 1/(2n+1)*C(3n,n).

Plane trees are nested tuples of children.  Ternary trees (outdegrees 0 or
3) are sized by internal nodes, even trees (all outdegrees even) by edges,
and non-crossing trees (spanning trees of a convex polygon without crossing
chords, rooted at vertex 0) by edges.  Reflection reverses children
recursively for plane trees and mirrors the polygon through the root for
non-crossing trees; an object equal to its reflection is symmetric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

PlaneTree = Tuple["PlaneTree", ...]

LEAF: PlaneTree = ()

#: Enumeration budgets per family (ternary by internal nodes, even by edges,
#: non-crossing by edges).
BUDGETS = {"ternary": 9, "even": 14, "noncrossing": 9}


def reflect_plane_tree(t: PlaneTree) -> PlaneTree:
    """Mirror image: recursively reverse the children at every node."""
    return tuple(reflect_plane_tree(c) for c in reversed(t))


@lru_cache(maxsize=None)
def ternary_trees(internal: int) -> tuple[PlaneTree, ...]:
    """All plane trees with outdegrees 0 or 3 and ``internal`` ternary nodes."""
    if internal == 0:
        return (LEAF,)
    out = []
    for i in range(internal):
        for j in range(internal - i):
            k = internal - 1 - i - j
            for a in ternary_trees(i):
                for b in ternary_trees(j):
                    for c in ternary_trees(k):
                        out.append((a, b, c))
    return tuple(out)


@lru_cache(maxsize=None)
def even_trees(edges: int) -> tuple[PlaneTree, ...]:
    """All plane trees with every outdegree even and ``edges`` edges."""
    if edges == 0:
        return (LEAF,)
    out = []
    for arity in range(2, edges + 1, 2):
        for split in _even_splits(edges - arity, arity):
            for kids in _combine(split):
                out.append(kids)
    return tuple(out)


def _even_splits(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` even parts (zero allowed)."""
    if parts == 1:
        if total % 2 == 0:
            yield (total,)
        return
    for head in range(0, total + 1, 2):
        for rest in _even_splits(total - head, parts - 1):
            yield (head,) + rest


def _combine(sizes: tuple[int, ...]) -> Iterator[PlaneTree]:
    if not sizes:
        yield ()
        return
    for head in even_trees(sizes[0]):
        for rest in _combine(sizes[1:]):
            yield (head,) + rest


# ---------------------------------------------------------------------------
# Non-crossing trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NonCrossingTree:
    """Spanning tree of the convex polygon on vertices 0..n, rooted at 0."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]


def reflect_noncrossing(t: NonCrossingTree) -> NonCrossingTree:
    """Mirror through the bisector at the root: vertex i goes to n+1-i mod n+1."""
    n = t.vertex_count
    flipped = frozenset(
        tuple(sorted(((n - a) % n, (n - b) % n))) for a, b in t.edges
    )
    return NonCrossingTree(n, flipped)


@lru_cache(maxsize=None)
def _arc_trees(length: int) -> tuple[frozenset[tuple[int, int]], ...]:
    """Edge sets of non-crossing spanning trees on 0..length (consecutive arc)."""
    if length == 0:
        return (frozenset(),)
    return tuple(_hang(1, length))


def _hang(start: int, end: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Trees on [start..end] split into arcs, each arc joined to vertex 0.

    Within the first arc [start..split] the vertex ``v`` adjacent to 0 is
    chosen; no edge of the arc may span across ``v``, so the arc falls into
    independent non-crossing trees on [start..v] and [v..split].
    """
    for split in range(start, end + 1):
        for v in range(start, split + 1):
            for left in _arc_trees(v - start):
                shifted_left = _shift(left, start)
                for right in _arc_trees(split - v):
                    head = (
                        shifted_left
                        | _shift(right, v)
                        | frozenset([(0, v)])
                    )
                    if split == end:
                        yield head
                    else:
                        for rest in _hang(split + 1, end):
                            yield head | rest


def _shift(edges: frozenset[tuple[int, int]], offset: int) -> frozenset[tuple[int, int]]:
    if offset == 0 or not edges:
        return edges
    return frozenset((a + offset, b + offset) for a, b in edges)


def noncrossing_trees(n: int) -> Iterator[NonCrossingTree]:
    """All non-crossing trees with ``n`` edges on the polygon 0..n."""
    if n < 0:
        raise ValueError(f"edge count must be nonnegative, got {n}")
    for edges in _arc_trees(n):
        yield NonCrossingTree(n + 1, edges)


def crossing_free(t: NonCrossingTree) -> bool:
    """Independent check that no two chords interleave around the polygon."""
    edges = [tuple(sorted(e)) for e in t.edges]
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if a < c < b < d or c < a < d < b:
                return False
    return True


def spans(t: NonCrossingTree) -> bool:
    """Independent check that the edge set is a spanning tree."""
    if len(t.edges) != t.vertex_count - 1:
        return False
    parent = list(range(t.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in t.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


# ---------------------------------------------------------------------------
# Censuses
# ---------------------------------------------------------------------------

def total_count_formula(n: int) -> int:
    """1/(2n+1) * C(3n, n): the shared size of all three families."""
    return math.comb(3 * n, n) // (2 * n + 1)


def symmetric_count_formula(n: int) -> int:
    """Symmetric objects at common index ``n``.

    Odd indices match the fixed-tree counts; even indices follow
    1/(n+1) * C(3n/2, n/2).
    """
    if n % 2 == 1:
        m = (n + 1) // 2
        return math.comb(3 * m - 2, m - 1) // m
    return math.comb(3 * n // 2, n // 2) // (n + 1)


def _check_budget(family: str, size: int) -> None:
    if family not in BUDGETS:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(BUDGETS)}")
    if size < 0 or size > BUDGETS[family]:
        raise ValueError(
            f"size {size} outside the enumeration budget {BUDGETS[family]} for {family}"
        )


def count_total(family: str, size: int) -> int:
    """Number of family members of the given size (family-specific units)."""
    _check_budget(family, size)
    if family == "ternary":
        return len(ternary_trees(size))
    if family == "even":
        return len(even_trees(size))
    return sum(1 for _ in noncrossing_trees(size))


def count_symmetric(family: str, size: int) -> int:
    """Number of family members equal to their own reflection."""
    _check_budget(family, size)
    if family == "ternary":
        return sum(1 for t in ternary_trees(size) if reflect_plane_tree(t) == t)
    if family == "even":
        return sum(1 for t in even_trees(size) if reflect_plane_tree(t) == t)
    return sum(1 for t in noncrossing_trees(size) if reflect_noncrossing(t) == t)
