"""Tree type, validation, statistics, decompositions, generation, text format."""

from __future__ import annotations

import re

import pytest
from hypothesis import given, strategies as st

from betatrees.tree import (
    BetaTree,
    Decomposable,
    Indecomposable,
    LEAF,
    SINGLE_EDGE,
    TreeParseError,
    attach_root,
    count_all,
    decompose,
    from_text,
    generate_all,
    glue_components,
    is_valid,
    merge_at_root,
    right_decompose,
    stats,
    to_text,
    validate,
)

# Counts of valid trees by node count; equals the number of rooted
# non-separable planar maps by edge count (1, 1, 2, 6, 22, 91, 408, 1938, ...).
TREE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 22, 6: 91, 7: 408, 8: 1938}


def t(text: str) -> BetaTree:
    return from_text(text)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def test_text_round_trip_basics():
    assert to_text(LEAF) == "(1)"
    assert to_text(SINGLE_EDGE) == "(1 (1))"
    assert from_text("(1)") == LEAF
    assert from_text("(1 (1))") == SINGLE_EDGE


def test_parse_is_whitespace_insensitive():
    assert from_text("(2 (1)(1))") == from_text("(2 (1) (1))")
    assert from_text("  ( 2\n(1) \t(1) ) ") == from_text("(2 (1) (1))")


@pytest.mark.parametrize(
    "bad, offset",
    [
        ("", 0),
        ("2 (1)", 0),
        ("(x)", 1),
        ("((1))", 1),
        ("(1", 2),
        ("(1))", 3),
        ("(0)", 1),
    ],
)
def test_parse_errors_carry_offset(bad, offset):
    with pytest.raises(TreeParseError) as err:
        from_text(bad)
    assert err.value.offset == offset


@st.composite
def labeled_trees(draw, max_depth=4):
    """Arbitrary valid trees, built bottom-up with random admissible labels."""
    if max_depth == 0 or draw(st.booleans()):
        return LEAF
    kids = draw(
        st.lists(labeled_trees(max_depth=max_depth - 1), min_size=1, max_size=3)
    )
    total = sum(c.label for c in kids)
    label = draw(st.integers(min_value=1, max_value=total))
    return BetaTree(label, kids)


@given(labeled_trees(), st.randoms())
def test_parse_round_trip_with_noise(subtree, rng):
    tree = BetaTree(
        sum(c.label for c in subtree.children) if subtree.children else 1,
        subtree.children,
    )
    text = to_text(tree)
    tokens = re.findall(r"\(|\)|\d+", text)
    noisy = "".join(tok + " " * rng.randrange(3) for tok in tokens)
    assert from_text(noisy) == tree
    assert is_valid(tree)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def test_validate_examples():
    assert validate(t("(1 (1))")) is None
    assert validate(t("(2 (1) (1))")) is None
    report = validate(BetaTree(3, (LEAF, LEAF)))
    assert report is not None and report.startswith("node 0")


def test_validate_rejects_nonpositive_labels():
    report = validate(BetaTree(-1, (LEAF,)))
    assert report is not None and "positive" in report


def test_validate_names_first_offender_in_preorder():
    # Node 1 (the first child, preorder) breaks the leaf rule before node 3 does.
    bad = BetaTree(3, (BetaTree(2), BetaTree(1, (BetaTree(2),))))
    report = validate(bad)
    assert report is not None and report.startswith("node 1")


def test_validate_interior_rule():
    # Interior label above its child sum.
    bad = BetaTree(3, (BetaTree(3, (LEAF, LEAF)),))
    report = validate(bad)
    assert report is not None and "outside" in report


def test_single_node_tree_must_have_label_one():
    assert validate(LEAF) is None
    assert validate(BetaTree(2)) is not None


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "text, expected",
    [
        ("(1 (1))", (1, 1, 1, 1)),
        ("(2 (2 (1) (1)))", (2, 1, 2, 1)),
        ("(1 (1 (1)))", (1, 1, 2, 2)),
    ],
)
def test_stats_examples(text, expected):
    s = stats(t(text))
    assert (s.root_label, s.sub, s.rpath, s.rsub) == expected


def test_stats_exhaustive_three_nodes():
    # Direct case analysis: the only 3-node trees and their statistics.
    observed = {to_text(x): stats(x) for x in generate_all(3)}
    assert observed == {
        "(1 (1 (1)))": stats(t("(1 (1 (1)))")),
        "(2 (1) (1))": stats(t("(2 (1) (1))")),
    }
    assert (observed["(2 (1) (1))"].sub, observed["(2 (1) (1))"].rsub) == (2, 1)


def test_stat_bounds_hold_exhaustively():
    for n in range(2, 9):
        for tree in generate_all(n):
            s = stats(tree)
            assert 1 <= s.sub <= s.root_label
            assert 1 <= s.rsub <= s.rpath


# ---------------------------------------------------------------------------
# Decompositions
# ---------------------------------------------------------------------------

def test_decompose_examples():
    d = decompose(t("(1 (1))"))
    assert isinstance(d, Indecomposable)
    assert d.child == LEAF and d.child_label == 1

    d = decompose(t("(2 (1) (1))"))
    assert isinstance(d, Decomposable)
    assert d.left == t("(1 (1))") and d.right == t("(1 (1))")

    d = decompose(t("(2 (2 (1) (1)))"))
    assert isinstance(d, Indecomposable)
    assert d.child == t("(2 (1) (1))") and d.child_label == 2


def test_decompose_atomic_error():
    with pytest.raises(ValueError, match="atomic"):
        decompose(LEAF)


def test_decompose_round_trip_exhaustive():
    for n in range(2, 9):
        for tree in generate_all(n):
            d = decompose(tree)
            if isinstance(d, Indecomposable):
                assert attach_root(d.child, d.child_label) == tree
            else:
                assert merge_at_root(d.left, d.right) == tree


def test_right_decompose_examples():
    assert right_decompose(t("(1 (1))")) == [t("(1 (1))")]
    assert right_decompose(t("(1 (1 (1)))")) == [t("(1 (1))"), t("(1 (1))")]
    assert right_decompose(t("(2 (2 (1) (1)))")) == [t("(2 (2 (1) (1)))")]


def test_right_decompose_atomic_error():
    with pytest.raises(ValueError, match="atomic"):
        right_decompose(LEAF)


def test_right_decompose_round_trip_exhaustive():
    for n in range(2, 9):
        for tree in generate_all(n):
            parts = right_decompose(tree)
            assert len(parts) == stats(tree).rsub
            assert glue_components(parts) == tree
            for part in parts:
                assert stats(part).rsub == 1


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def test_generate_counts_match_known_sequence():
    for n, expected in TREE_COUNTS.items():
        assert sum(1 for _ in generate_all(n)) == expected
        assert count_all(n) == expected


def test_generate_three_nodes_exactly():
    assert [to_text(x) for x in generate_all(3)] == ["(1 (1 (1)))", "(2 (1) (1))"]


def test_generate_yields_valid_unique_sorted():
    for n in range(1, 8):
        texts = [to_text(x) for x in generate_all(n)]
        assert len(texts) == len(set(texts))
        assert texts == sorted(texts)
        for tree in generate_all(n):
            assert validate(tree) is None
            assert tree.size == n


def test_generate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        list(generate_all(0))
