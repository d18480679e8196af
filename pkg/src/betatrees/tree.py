"""Rooted plane trees with positive integer labels and the three label rules.

A tree is valid when every leaf carries label 1, the root label equals the
sum of its children's labels, and every other internal label lies between 1
and the sum of its children's labels.  This module provides the tree value
type, validation, the four classical statistics (root label, number of root
subtrees, rightmost-path length, number of 1-labels below the root on that
path), both decompositions, exhaustive generation, and a text interchange
format.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Union


class TreeParseError(ValueError):
    """Tree text that does not match the grammar; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class BetaTree:
    """A rooted plane tree with an integer label at every node.

    Instances are values: structural equality with a hash cached at
    construction.  Treat them as immutable; every operation in this package
    returns new trees.  The label rules are *not* enforced here so that
    ``validate`` can report violations on arbitrary candidates.
    """

    __slots__ = ("label", "children", "_size", "_hash")

    label: int
    children: tuple["BetaTree", ...]

    def __init__(self, label: int, children: Iterable["BetaTree"] = ()):
        self.label = label
        self.children = tuple(children)
        self._size = 0
        self._hash = -1

    @property
    def size(self) -> int:
        """Number of nodes; computed on first use and memoized."""
        s = self._size
        if s == 0:
            s = 1
            for c in self.children:
                s += c.size
            self._size = s
        return s

    def __hash__(self):
        # FNV-style structural hash, masked to 60 bits (never the -1 sentinel).
        acc = self._hash
        if acc == -1:
            acc = self.label * 1099511628211 & 1152921504606846975
            for c in self.children:
                acc = (acc ^ hash(c)) * 1099511628211 & 1152921504606846975
            self._hash = acc
        return acc

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BetaTree):
            return NotImplemented
        if self.label != other.label or hash(self) != hash(other):
            return False
        return self.children == other.children

    def __repr__(self):
        return f"BetaTree[{to_text(self)}]"

    def __str__(self):
        return to_text(self)


#: The one-node tree (a leaf, hence label 1).
LEAF = BetaTree(1)

#: The two-node tree.
SINGLE_EDGE = BetaTree(1, (LEAF,))


@dataclass(frozen=True)
class TreeStats:
    """The four statistics of a tree on at least two nodes."""

    root_label: int
    sub: int
    rpath: int
    rsub: int


def rightmost_path(t: BetaTree) -> list[BetaTree]:
    """Nodes from the root down to the rightmost leaf, root first."""
    path = [t]
    while path[-1].children:
        path.append(path[-1].children[-1])
    return path


def stats(t: BetaTree) -> TreeStats:
    """Compute root label, root degree, rightmost-path length and its 1-count."""
    path = rightmost_path(t)
    rsub = sum(1 for node in path[1:] if node.label == 1)
    return TreeStats(
        root_label=t.label,
        sub=len(t.children),
        rpath=len(path) - 1,
        rsub=rsub,
    )


def validate(t: BetaTree) -> str | None:
    """Check the three label rules; return ``None`` when valid.

    On failure returns a message naming the first offending node in
    depth-first (preorder) order, counted from 0.
    """
    stack = [(t, True)]
    index = 0
    while stack:
        node, is_root = stack.pop()
        if node.label <= 0:
            return f"node {index}: label {node.label} is not a positive integer"
        if not node.children:
            if node.label != 1:
                return f"node {index}: leaf has label {node.label}, expected 1"
        else:
            total = sum(c.label for c in node.children)
            if is_root:
                if node.label != total:
                    return (
                        f"node {index}: root label {node.label} differs from "
                        f"child label sum {total}"
                    )
            elif not 1 <= node.label <= total:
                return (
                    f"node {index}: internal label {node.label} outside "
                    f"[1, {total}]"
                )
        stack.extend((c, False) for c in reversed(node.children))
        index += 1
    return None


def is_valid(t: BetaTree) -> bool:
    return validate(t) is None


# ---------------------------------------------------------------------------
# Decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Indecomposable:
    """Split of a tree whose root has a single child.

    ``child`` is the subtree below the removed top edge with its root label
    re-derived from the sum rule (1 when it becomes a leaf); ``child_label``
    records the original label, which equals the whole tree's root label.
    """

    child: BetaTree
    child_label: int


@dataclass(frozen=True)
class Decomposable:
    """Split at the root: everything but the rightmost subtree, and the rest."""

    left: BetaTree
    right: BetaTree


Decomposition = Union[Indecomposable, Decomposable]


def _reroot(t: BetaTree) -> BetaTree:
    """Re-derive the root label from the sum rule (1 for a leaf)."""
    target = sum(c.label for c in t.children) if t.children else 1
    return t if t.label == target else BetaTree(target, t.children)


def decompose(t: BetaTree) -> Decomposition:
    """Split a tree of at least two nodes at the root.

    A root with one child loses its top edge; otherwise the rightmost
    subtree is separated from the rest, both halves keeping a copy of the
    root with the label re-derived from the sum rule.
    """
    if t.size == 1:
        raise ValueError("atomic: the single-node tree has no decomposition")
    if len(t.children) == 1:
        child = t.children[0]
        return Indecomposable(child=_reroot(child), child_label=child.label)
    rest, last = t.children[:-1], t.children[-1]
    return Decomposable(
        left=BetaTree(sum(c.label for c in rest), rest),
        right=BetaTree(last.label, (last,)),
    )


def attach_root(child: BetaTree, child_label: int) -> BetaTree:
    """Inverse of the single-child split: re-attach the top edge."""
    return BetaTree(child_label, (BetaTree(child_label, child.children),))


def merge_at_root(left: BetaTree, right: BetaTree) -> BetaTree:
    """Inverse of the rightmost split: share the root, concatenate subtrees."""
    return BetaTree(left.label + right.label, left.children + right.children)


def glue(upper: BetaTree, lower: BetaTree) -> BetaTree:
    """Identify the rightmost leaf of ``upper`` with the root of ``lower``.

    The identified node keeps the leaf's label 1.
    """
    if not upper.children:
        return BetaTree(1, lower.children)
    return BetaTree(
        upper.label, upper.children[:-1] + (glue(upper.children[-1], lower),)
    )


def right_decompose(t: BetaTree) -> list[BetaTree]:
    """Split a tree at the label-1 nodes of its rightmost path.

    Returns the components top-down (the first contains the original root);
    their number equals ``stats(t).rsub`` and ``glue_components`` rebuilds
    the input exactly.
    """
    if t.size == 1:
        raise ValueError("atomic: the single-node tree has no right-decomposition")
    components = []
    current = t
    while True:
        path = rightmost_path(current)
        cut = next(i for i in range(1, len(path)) if path[i].label == 1)
        if cut == len(path) - 1:
            components.append(current)
            return components
        components.append(_replace_on_rightmost_path(current, cut, LEAF))
        components_root = path[cut]
        current = BetaTree(
            sum(c.label for c in components_root.children), components_root.children
        )


def _replace_on_rightmost_path(t: BetaTree, depth: int, replacement: BetaTree) -> BetaTree:
    if depth == 0:
        return replacement
    return BetaTree(
        t.label,
        t.children[:-1]
        + (_replace_on_rightmost_path(t.children[-1], depth - 1, replacement),),
    )


def glue_components(components: Iterable[BetaTree]) -> BetaTree:
    """Reassemble right-decomposition components along the rightmost path."""
    parts = list(components)
    if not parts:
        raise ValueError("cannot glue an empty component sequence")
    for part in parts:
        if part.size < 2:
            raise ValueError("components must have at least two nodes")
    return reduce(lambda lower, upper: glue(upper, lower), reversed(parts[:-1]), parts[-1])


# ---------------------------------------------------------------------------
# Exhaustive generation
# ---------------------------------------------------------------------------

#: Largest subtree size whose pool is kept in memory; larger sizes stream.
_POOL_LIMIT = 9

#: Default cap on exhaustive generation, matching the series census budget.
GENERATION_BUDGET = 12


@lru_cache(maxsize=None)
def _subtree_pool(size: int) -> tuple[BetaTree, ...]:
    return tuple(_iter_subtrees_uncached(size))


def _iter_subtrees(size: int) -> Iterable[BetaTree]:
    """All subtrees of ``size`` nodes valid below a root (interior label rule)."""
    if size <= _POOL_LIMIT:
        return _subtree_pool(size)
    return _iter_subtrees_uncached(size)


def _iter_subtrees_uncached(size: int) -> Iterator[BetaTree]:
    if size == 1:
        yield LEAF
        return
    for kids in _child_tuples(size - 1):
        total = sum(c.label for c in kids)
        for label in range(1, total + 1):
            yield BetaTree(label, kids)


def _child_tuples(total: int) -> Iterator[tuple[BetaTree, ...]]:
    """Ordered tuples of subtrees whose sizes sum to ``total`` (>= 1)."""
    if total == 0:
        yield ()
        return
    for head_size in range(1, total + 1):
        for head in _iter_subtrees(head_size):
            for rest in _child_tuples(total - head_size):
                yield (head,) + rest


def iter_trees(n: int) -> Iterator[BetaTree]:
    """Every valid tree with ``n`` nodes, in raw recursion order (fast path)."""
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    if n == 1:
        yield LEAF
        return
    for kids in _child_tuples(n - 1):
        total = 0
        for c in kids:
            total += c.label
        yield BetaTree(total, kids)


def generate_all(n: int) -> Iterator[BetaTree]:
    """Yield every valid tree with ``n`` nodes exactly once.

    The stream is deterministic: trees appear in lexicographic order of
    their text forms.
    """
    if n == 1:
        yield LEAF
        return
    trees = list(iter_trees(n))
    trees.sort(key=to_text)
    yield from trees


def count_all(n: int) -> int:
    """Number of valid trees with ``n`` nodes."""
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    if n == 1:
        return 1
    return sum(1 for _ in _child_tuples(n - 1))


# ---------------------------------------------------------------------------
# Text format:  tree ::= "(" INT { tree } ")"
# ---------------------------------------------------------------------------

def to_text(t: BetaTree) -> str:
    """Render a tree as ``(label child child ...)``."""
    if not t.children:
        return f"({t.label})"
    body = " ".join(to_text(c) for c in t.children)
    return f"({t.label} {body})"


def from_text(text: str) -> BetaTree:
    """Parse the text form; whitespace between tokens is ignored."""
    pos = _skip_ws(text, 0)
    tree, pos = _parse_tree(text, pos)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise TreeParseError("unexpected trailing input", pos)
    return tree


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_tree(text: str, pos: int) -> tuple[BetaTree, int]:
    if pos >= len(text) or text[pos] != "(":
        raise TreeParseError("expected '('", pos)
    pos = _skip_ws(text, pos + 1)
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise TreeParseError("expected a label (base-10 integer)", pos)
    label = int(text[start:pos])
    if label <= 0:
        raise TreeParseError("label must be positive", start)
    children = []
    pos = _skip_ws(text, pos)
    while pos < len(text) and text[pos] == "(":
        child, pos = _parse_tree(text, pos)
        children.append(child)
        pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != ")":
        raise TreeParseError("expected ')'", pos)
    return BetaTree(label, children), pos + 1
