"""Fixed trees: oracle is always the involution itself (h(t) == t)."""

from __future__ import annotations

import pytest

from betatrees.fixed_points import (
    F0,
    F1,
    F2,
    build_f1,
    build_f2,
    classify,
    count_fixed,
    enumerate_fixed,
    is_fixed,
    rebuild,
)
from betatrees.tree import LEAF, from_text, generate_all, to_text

# Number of fixed trees with 2n nodes, n = 1..7.
FIXED_COUNTS = [1, 2, 7, 30, 143, 728, 3876]


def t(text):
    return from_text(text)


def brute_fixed(n):
    return [tree for tree in generate_all(n) if is_fixed(tree)]


def test_is_fixed_examples():
    assert is_fixed(t("(1)"))
    assert is_fixed(t("(1 (1))"))
    assert not is_fixed(t("(1 (1 (1)))"))


def test_build_f1_examples():
    assert build_f1(t("(1)")) == t("(1 (1))")
    assert build_f1(t("(1 (1))")) == t("(2 (1) (1 (1)))")


def test_build_f1_audit():
    for n in range(1, 7):
        for a in generate_all(n):
            built = build_f1(a)
            assert built.size == 2 * a.size
            assert is_fixed(built)


def test_build_f2_examples():
    assert build_f2(t("(1)"), t("(1 (1))"), 2) == t("(2 (2 (1) (1)))")
    six = build_f2(t("(1)"), t("(2 (1) (1 (1)))"), 2)
    assert six == t("(2 (2 (1) (1 (1)) (1)))")
    assert six.size == 6 and is_fixed(six)


def test_build_f2_audit():
    # Every legal (a1, a2, b) with at most 10 nodes in total yields a fixed tree.
    fixed_pool = {m: brute_fixed(m) for m in (2, 4, 6, 8)}
    for size1 in range(1, 5):
        for a1 in generate_all(size1):
            for size2 in range(2, 10 - 2 * size1 + 1, 2):
                for a2 in fixed_pool[size2]:
                    for b in range(2, a2.label + 2):
                        built = build_f2(a1, a2, b)
                        assert built.size == 2 * size1 + size2
                        assert is_fixed(built)


@pytest.mark.parametrize(
    "a1, a2, b, message",
    [
        ("(1)", "(1 (1))", 1, "b >= 2"),
        ("(1)", "(1)", 2, "at least two nodes"),
        ("(1)", "(1 (1 (1)))", 2, "not a fixed tree"),
        ("(1)", "(1 (1))", 3, "below b - 1"),
    ],
)
def test_build_f2_rejects_bad_inputs(a1, a2, b, message):
    with pytest.raises(ValueError, match=message):
        build_f2(t(a1), t(a2), b)


def test_classify_examples():
    assert classify(t("(1)")) == F0()
    assert classify(t("(2 (1) (1 (1)))")) == F1(t("(1 (1))"))
    assert classify(t("(2 (2 (1) (1)))")) == F2(t("(1)"), t("(1 (1))"), 2)


def test_classify_rejects_non_fixed():
    with pytest.raises(ValueError, match="not a fixed point"):
        classify(t("(1 (1 (1)))"))


def test_classify_round_trips():
    for n in range(2, 11, 2):
        for tree in brute_fixed(n):
            structure = classify(tree)
            assert rebuild(structure) == tree
            # The three shapes are mutually exclusive.
            kinds = [isinstance(structure, k) for k in (F0, F1, F2)]
            assert sum(kinds) == 1


def test_classify_inverts_builders():
    a = t("(2 (1) (1))")
    assert classify(build_f1(a)) == F1(a)
    built = build_f2(t("(1 (1))"), t("(2 (2 (1) (1)))"), 3)
    assert classify(built) == F2(t("(1 (1))"), t("(2 (2 (1) (1)))"), 3)


def test_enumerate_matches_brute_force():
    for n in range(2, 11, 2):
        direct = {to_text(x) for x in enumerate_fixed(n)}
        brute = {to_text(x) for x in brute_fixed(n)}
        assert direct == brute
        assert len(list(enumerate_fixed(n))) == len(direct)  # no duplicates


def test_enumerate_counts():
    for n, expected in ((2, 1), (4, 2), (6, 7), (8, 30)):
        assert sum(1 for _ in enumerate_fixed(n)) == expected


def test_enumerate_odd_is_empty_with_diagnostic():
    with pytest.warns(UserWarning, match="odd"):
        assert list(enumerate_fixed(5)) == []


def test_enumerate_rejects_tiny():
    with pytest.raises(ValueError):
        list(enumerate_fixed(0))


def test_count_fixed_sequence():
    assert [count_fixed(n) for n in range(1, 8)] == FIXED_COUNTS


def test_no_odd_fixed_trees():
    for n in (3, 5, 7, 9):
        assert brute_fixed(n) == []


def test_fixed_trees_with_root_label_one_are_tiny():
    # Any larger fixed tree must have root label above 1.
    for n in range(2, 11, 2):
        for tree in brute_fixed(n):
            if tree.label == 1:
                assert tree in (LEAF, t("(1 (1))"))
