"""Command-line surface: outputs, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from betatrees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fixed_points_count(capsys):
    code, out, _ = run(capsys, "fixed-points", "--nodes", "6", "--count")
    assert code == 0
    assert out == "7\n"


def test_apply_h_single_node(capsys):
    code, out, _ = run(capsys, "apply-h", "--tree", "(1)")
    assert code == 0
    assert out == "(1)\n"


def test_apply_h_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("(1 (1 (1)))\n(1)\n"))
    code, out, _ = run(capsys, "apply-h")
    assert code == 0
    assert out == "(2 (1) (1))\n(1)\n"


def test_gen_trees_listing_and_count(capsys):
    code, out, _ = run(capsys, "gen-trees", "--nodes", "3")
    assert code == 0
    assert out == "(1 (1 (1)))\n(2 (1) (1))\n"
    code, out, _ = run(capsys, "gen-trees", "--nodes", "4", "--count")
    assert out == "6\n"


def test_gen_trees_jsonl(capsys):
    code, out, _ = run(capsys, "gen-trees", "--nodes", "2", "--format", "jsonl")
    assert code == 0
    assert json.loads(out.strip()) == {"tree": "(1 (1))"}


def test_stats_output(capsys):
    code, out, _ = run(capsys, "stats", "--tree", "(2 (2 (1) (1)))")
    assert code == 0
    assert out == "2\t1\t2\t1\n"


def test_classify_and_builders(capsys):
    code, out, _ = run(capsys, "classify", "--tree", "(2 (1) (1 (1)))")
    assert code == 0
    assert out == "F1 a=(1 (1))\n"
    code, out, _ = run(capsys, "build-f1", "--tree", "(1 (1))")
    assert out == "(2 (1) (1 (1)))\n"
    code, out, _ = run(capsys, "build-f2", "--a1", "(1)", "--a2", "(1 (1))", "--b", "2")
    assert out == "(2 (2 (1) (1)))\n"


def test_fixed_points_classify_listing(capsys):
    code, out, _ = run(capsys, "fixed-points", "--nodes", "4", "--classify")
    assert code == 0
    lines = sorted(out.strip().split("\n"))
    assert lines == ["(2 (1) (1 (1)))\tF1", "(2 (2 (1) (1)))\tF2"]


def test_fixed_points_odd_note(capsys):
    code, out, err = run(capsys, "fixed-points", "--nodes", "5", "--count")
    assert code == 0
    assert out == "0\n"
    assert "odd" in err


def test_series_check_pass(capsys):
    code, out, _ = run(capsys, "series", "--check", "ternary", "--order", "12")
    assert code == 0
    assert out == "PASS ternary order=12\n"


def test_series_dump_table(capsys):
    code, out, _ = run(capsys, "series", "--dump", "u", "--order", "4")
    assert code == 0
    assert out == "n\tk\tvalue\n1\t0\t1\n2\t0\t2\n3\t0\t7\n4\t0\t30\n"


def test_map_round_trip_through_cli(capsys):
    code, out, _ = run(capsys, "tree-to-map", "--tree", "(1 (1))")
    assert code == 0
    record = json.loads(out)
    assert record["edges"] == 2 and len(record["alpha"]) == 4


def test_dual_via_stdin(capsys, monkeypatch):
    import io

    code, out, _ = run(capsys, "tree-to-map", "--tree", "(2 (1) (1))")
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out2, _ = run(capsys, "dual")
    assert code == 0
    assert json.loads(out2)["edges"] == 3


def test_self_dual_census(capsys):
    code, out, _ = run(capsys, "self-dual", "--edges", "4")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "2"
    assert len(lines) == 3


def test_symmetric_counts(capsys):
    code, out, _ = run(capsys, "symmetric", "--family", "noncrossing", "--size", "3")
    assert code == 0
    assert out == "total\t12\nsymmetric\t2\n"


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--max-nodes", "6")
    assert code == 0
    lines = out.strip().split("\n")
    assert all(line.startswith("PASS") for line in lines)
    # At least one check per family of results.
    text = "\n".join(lines)
    for fragment in (
        "involution-squared",
        "statistic-swap",
        "fixed-structure",
        "series-b-quadratic",
        "series-ab-link",
        "series-a-algebraic",
        "bijection-audit",
        "dual-involution",
        "self-dual-census",
        "noncorrespondence-witness",
        "symmetric-census",
    ):
        assert fragment in text


def test_output_ends_with_single_newline(capsys):
    for argv in (
        ["gen-trees", "--nodes", "2"],
        ["fixed-points", "--nodes", "2", "--count"],
        ["stats", "--tree", "(1)"],
    ):
        _, out, _ = run(capsys, *argv)
        assert out.endswith("\n") and not out.endswith("\n\n")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_invalid_tree_reports_error(capsys):
    code, _, err = run(capsys, "apply-h", "--tree", "(3 (1) (1))")
    assert code == 1
    assert "invalid" in err


def test_parse_error_reports_offset(capsys):
    code, _, err = run(capsys, "stats", "--tree", "(1")
    assert code == 1
    assert "byte" in err
