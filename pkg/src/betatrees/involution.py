"""The recursive involution on valid trees.

The map exchanges the two decompositions: a tree split at the root goes to a
tree split along its rightmost path, and vice versa.  It fixes the one-node
and two-node trees, preserves node count, and swaps the statistic pairs
(root label, rightmost-path length) and (root degree, rightmost-path
1-count).
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Optional

from .tree import (
    BetaTree,
    LEAF,
    SINGLE_EDGE,
    glue,
    glue_components,
    merge_at_root,
    right_decompose,
    stats,
    validate,
)


def h(t: BetaTree) -> BetaTree:
    """Apply the involution to a valid tree.

    Single-child trees lose their top edge: the image of the remainder gains
    a new rightmost leaf hanging at depth ``r - 1`` on its rightmost path
    (``r`` being the removed child's original label), and every proper
    ancestor of that leaf has its label increased by 1.  Multi-child trees
    split into (all-but-rightmost, rightmost); the image glues the rightmost
    part's image on top of the other image along the rightmost path.
    """
    if not t.children:
        return t
    return _h_children(t.children)


def _h_children(kids: tuple[BetaTree, ...]) -> BetaTree:
    """Image of the tree whose root (label implied by the sum rule) has ``kids``."""
    if len(kids) == 1:
        return _h_single(kids[0])
    return glue(_h_single(kids[-1]), _h_children(kids[:-1]))


def _h_single(sub: BetaTree) -> BetaTree:
    """Image of the single-child tree whose root's child subtree is ``sub``."""
    if not sub.children:
        return SINGLE_EDGE
    return _attach_bumped_leaf(_h_children(sub.children), sub.label - 1)


def _attach_bumped_leaf(node: BetaTree, depth: int) -> BetaTree:
    """Hang a new rightmost leaf at ``depth`` on the rightmost path, +1 above."""
    if depth == 0:
        return BetaTree(node.label + 1, node.children + (LEAF,))
    return BetaTree(
        node.label + 1,
        node.children[:-1] + (_attach_bumped_leaf(node.children[-1], depth - 1),),
    )


def check_stat_swap(t: BetaTree) -> bool:
    """Whether the four statistics swap as expected between ``t`` and ``h(t)``.

    With ``s = h(t)``: root label and rightmost-path length exchange, and so
    do the root degree and the rightmost-path 1-count.
    """
    if t.size < 2:
        raise ValueError("statistic swap is defined for trees on >= 2 nodes")
    a, b = stats(t), stats(h(t))
    return (
        a.root_label == b.rpath
        and b.root_label == a.rpath
        and a.sub == b.rsub
        and b.sub == a.rsub
    )


def check_right_decomposition_image(
    components: Iterable[BetaTree], trailing: Optional[BetaTree] = None
) -> bool:
    """Check how the involution transports a right-decomposition.

    The pieces (components plus the optional trailing tree) are glued along
    the rightmost path into a tree ``t``; the image ``h(t)`` must equal the
    root-level stack of the component images in reverse order, so that the
    rightmost subtree of the image comes from the topmost component.
    """
    pieces = list(components)
    if trailing is not None:
        pieces.append(trailing)
    assembled = glue_components(pieces)
    report = validate(assembled)
    if report is not None:
        raise ValueError(f"pieces do not assemble into a valid tree: {report}")
    parts = right_decompose(assembled)
    expected = reduce(merge_at_root, (h(c) for c in reversed(parts)))
    return h(assembled) == expected
