"""Command-line interface: one subcommand per module, deterministic output.

Exit codes: 0 on success or all checks passing, 1 when a check fails, 2 on
usage errors.  Tree arguments use the text grammar; maps use the JSON object
format; commands that read objects also accept them on standard input, one
per line.  ``--format jsonl`` switches listing output to one JSON record per
line.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Iterable, Iterator

from . import bijection, fixed_points, involution, maps, series, symmetry, tree

SERIES_CHECKS = ("b-quadratic", "ab-link", "a-algebraic", "ternary")


def _tree_inputs(args) -> Iterator[tree.BetaTree]:
    if getattr(args, "tree", None) is not None:
        yield tree.from_text(args.tree)
        return
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield tree.from_text(line)


def _map_inputs(args) -> Iterator[maps.RootedMap]:
    if getattr(args, "map", None) is not None:
        yield maps.map_from_json(args.map)
        return
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield maps.map_from_json(line)


def _emit(records: Iterable[dict], args, text_key: str) -> None:
    for record in records:
        if args.format == "jsonl":
            print(json.dumps(record))
        else:
            print(record[text_key])


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_gen_trees(args) -> int:
    if args.count:
        print(tree.count_all(args.nodes))
        return 0
    _emit(
        ({"tree": tree.to_text(t)} for t in tree.generate_all(args.nodes)),
        args,
        "tree",
    )
    return 0


def _cmd_stats(args) -> int:
    for t in _tree_inputs(args):
        report = tree.validate(t)
        if report is not None:
            print(f"invalid tree: {report}", file=sys.stderr)
            return 1
        s = tree.stats(t)
        record = {
            "tree": tree.to_text(t),
            "root_label": s.root_label,
            "sub": s.sub,
            "rpath": s.rpath,
            "rsub": s.rsub,
        }
        if args.format == "jsonl":
            print(json.dumps(record))
        else:
            print(f"{s.root_label}\t{s.sub}\t{s.rpath}\t{s.rsub}")
    return 0


def _cmd_apply_h(args) -> int:
    for t in _tree_inputs(args):
        report = tree.validate(t)
        if report is not None:
            print(f"invalid tree: {report}", file=sys.stderr)
            return 1
        _emit([{"tree": tree.to_text(involution.h(t))}], args, "tree")
    return 0


def _structure_record(structure) -> dict:
    if isinstance(structure, fixed_points.F0):
        return {"kind": "F0"}
    if isinstance(structure, fixed_points.F1):
        return {"kind": "F1", "a": tree.to_text(structure.a)}
    return {
        "kind": "F2",
        "a1": tree.to_text(structure.a1),
        "a2": tree.to_text(structure.a2),
        "b": structure.b,
    }


def _structure_text(record: dict) -> str:
    if record["kind"] == "F0":
        return "F0"
    if record["kind"] == "F1":
        return f"F1 a={record['a']}"
    return f"F2 a1={record['a1']} a2={record['a2']} b={record['b']}"


def _cmd_fixed_points(args) -> int:
    if args.nodes % 2 == 1 and args.nodes != 1:
        print(f"note: no fixed trees on {args.nodes} nodes (odd)", file=sys.stderr)
        if args.count:
            print(0)
        return 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        members = (
            [tree.LEAF] if args.nodes == 1 else list(fixed_points.enumerate_fixed(args.nodes))
        )
    if args.count:
        print(len(members))
        return 0
    for t in members:
        record = {"tree": tree.to_text(t)}
        if args.classify:
            record.update(_structure_record(fixed_points.classify(t)))
        if args.format == "jsonl":
            print(json.dumps(record))
        elif args.classify:
            print(f"{record['tree']}\t{record['kind']}")
        else:
            print(record["tree"])
    return 0


def _cmd_classify(args) -> int:
    for t in _tree_inputs(args):
        record = _structure_record(fixed_points.classify(t))
        if args.format == "jsonl":
            print(json.dumps(record))
        else:
            print(_structure_text(record))
    return 0


def _cmd_build_f1(args) -> int:
    built = fixed_points.build_f1(tree.from_text(args.tree))
    print(tree.to_text(built))
    return 0


def _cmd_build_f2(args) -> int:
    built = fixed_points.build_f2(
        tree.from_text(args.a1), tree.from_text(args.a2), args.b
    )
    print(tree.to_text(built))
    return 0


def _series_residuals(name: str, order: int) -> list[tuple[str, series.TruncatedBiSeries]]:
    if name == "b-quadratic":
        return [("b-quadratic", series.b_quadratic_residual(order))]
    if name == "ab-link":
        return [("ab-link", series.ab_link_residual(order))]
    if name == "a-algebraic":
        closed = series.fixed_point_series(order)
        at_y1 = series.fixed_point_census(order).substitute_y1()
        return [
            ("a-quadratic", series.a_quadratic_residual(order)),
            ("a-cubic", series.a_cubic_residual(order)),
            ("a-closed-form", at_y1 - closed),
        ]
    return [("ternary", series.ternary_link_residual(order))]


def _cmd_series(args) -> int:
    if args.dump:
        order = args.order
        if args.dump == "A":
            table = series.fixed_point_census(order if order else 10)
        elif args.dump == "B":
            table = series.tree_census(order if order else 10)
        elif args.dump == "u":
            table = series.fixed_point_series(order if order else 20)
        else:
            table = series.ternary_tree_series(order if order else 20)
        print("n\tk\tvalue")
        for (n, k), value in sorted(table.coeffs.items()):
            print(f"{n}\t{k}\t{value}")
        return 0
    if args.check is None:
        print("error: series needs --check or --dump", file=sys.stderr)
        return 2
    names = list(SERIES_CHECKS) if args.check == "all" else [args.check]
    failed = False
    for name in names:
        order = args.order if args.order else (20 if name == "ternary" else 10)
        for label, residual in _series_residuals(name, order):
            offender = series.first_nonzero(residual)
            if offender is None:
                print(f"PASS {label} order={order}")
            else:
                failed = True
                (n, k), value = offender
                print(f"FAIL {label} order={order} first x^{n} y^{k} = {value}")
    return 1 if failed else 0


def _cmd_tree_to_map(args) -> int:
    for t in _tree_inputs(args):
        report = tree.validate(t)
        if report is not None:
            print(f"invalid tree: {report}", file=sys.stderr)
            return 1
        print(maps.map_to_json(bijection.tree_to_map(t)))
    return 0


def _cmd_dual(args) -> int:
    for m in _map_inputs(args):
        print(maps.map_to_json(maps.dual(m)))
    return 0


def _cmd_self_dual(args) -> int:
    if args.edges > tree.GENERATION_BUDGET:
        print(
            f"edge count {args.edges} exceeds the budget {tree.GENERATION_BUDGET}",
            file=sys.stderr,
        )
        return 2
    hits = []
    for t in tree.generate_all(args.edges):
        m = bijection.tree_to_map(t)
        if args.edges >= 2 and maps.is_self_dual(m):
            hits.append(maps.canonical_code(m))
    if args.format == "jsonl":
        print(json.dumps({"edges": args.edges, "count": len(hits)}))
        for code in hits:
            print(json.dumps({"code": list(code)}))
    else:
        print(len(hits))
        for code in hits:
            print(" ".join(str(x) for x in code))
    return 0


def _cmd_bijection_audit(args) -> int:
    failed = False
    for n in range(1, args.nodes + 1):
        codes = set()
        degree_law = True
        nonseparable = True
        total = 0
        for t in tree.generate_all(n):
            m = bijection.tree_to_map(t)
            total += 1
            codes.add(maps.canonical_code(m))
            if maps.root_face_degree(m) != t.label + 1:
                degree_law = False
            if not maps.is_nonseparable(m):
                nonseparable = False
        injective = len(codes) == total
        ok = injective and degree_law and nonseparable
        failed = failed or not ok
        status = "PASS" if ok else "FAIL"
        print(
            f"{status} nodes={n} images={len(codes)} injective={injective} "
            f"degree-law={degree_law} nonseparable={nonseparable}"
        )
    return 1 if failed else 0


def _cmd_symmetric(args) -> int:
    total = symmetry.count_total(args.family, args.size)
    sym = symmetry.count_symmetric(args.family, args.size)
    if args.format == "jsonl":
        print(
            json.dumps(
                {
                    "family": args.family,
                    "size": args.size,
                    "total": total,
                    "symmetric": sym,
                }
            )
        )
    else:
        print(f"total\t{total}")
        print(f"symmetric\t{sym}")
    return 0


# ---------------------------------------------------------------------------
# The verify battery
# ---------------------------------------------------------------------------

def _verify_checks(max_nodes: int, order: int) -> Iterator[tuple[str, bool]]:
    trees_by_size = {n: list(tree.generate_all(n)) for n in range(1, max_nodes + 1)}

    ok = all(
        involution.h(involution.h(t)) == t
        for n in range(1, max_nodes + 1)
        for t in trees_by_size[n]
    )
    yield f"involution-squared nodes<={max_nodes}", ok

    ok = all(
        involution.check_stat_swap(t)
        for n in range(2, max_nodes + 1)
        for t in trees_by_size[n]
    )
    yield f"statistic-swap nodes<={max_nodes}", ok

    ok = True
    for n in range(2, max_nodes + 1, 2):
        brute = {t for t in trees_by_size[n] if fixed_points.is_fixed(t)}
        direct = set(fixed_points.enumerate_fixed(n))
        ok = ok and brute == direct
        ok = ok and all(fixed_points.rebuild(fixed_points.classify(t)) == t for t in brute)
    yield f"fixed-structure nodes<={max_nodes}", ok

    ok = all(
        not any(fixed_points.is_fixed(t) for t in trees_by_size[n])
        for n in range(3, max_nodes + 1, 2)
    )
    yield f"odd-sizes-empty nodes<={max_nodes}", ok

    ok = all(
        sum(1 for t in trees_by_size[2 * m] if fixed_points.is_fixed(t))
        == fixed_points.count_fixed(m)
        for m in range(1, max_nodes // 2 + 1)
    )
    yield f"fixed-counts nodes<={max_nodes}", ok

    yield f"series-b-quadratic order={order}", series.verify_b_quadratic(order)
    yield f"series-ab-link order={order}", series.verify_ab_link(order)
    yield f"series-a-algebraic order={order}", series.verify_a_algebraic(order)
    yield "series-ternary order=20", series.verify_ternary_link(20)

    map_nodes = min(max_nodes, 8)
    image_maps = {}
    ok = True
    for n in range(1, map_nodes + 1):
        codes = set()
        image_maps[n] = []
        for t in trees_by_size[n]:
            m = bijection.tree_to_map(t)
            image_maps[n].append(m)
            codes.add(maps.canonical_code(m))
            ok = ok and maps.validate_map(m) is None
            ok = ok and maps.is_nonseparable(m)
            ok = ok and maps.root_face_degree(m) == t.label + 1
        ok = ok and len(codes) == len(trees_by_size[n])
    yield f"bijection-audit nodes<={map_nodes}", ok

    ok = all(
        maps.canonical_code(maps.dual(maps.dual(m))) == maps.canonical_code(m)
        for n in range(2, map_nodes + 1)
        for m in image_maps[n]
    )
    yield f"dual-involution edges<={map_nodes}", ok

    ok = True
    for n in range(2, map_nodes + 1, 2):
        count = sum(1 for m in image_maps[n] if maps.is_self_dual(m))
        ok = ok and count == fixed_points.count_fixed(n // 2)
    yield f"self-dual-census edges<={map_nodes}", ok

    yield "noncorrespondence-witness nodes<=6", (
        bijection.witness_noncorrespondence(6) is not None
    )

    ok = True
    for n in range(1, 6):
        expected = symmetry.symmetric_count_formula(n)
        ok = ok and symmetry.count_symmetric("ternary", n) == expected
        ok = ok and symmetry.count_symmetric("even", 2 * n) == expected
        ok = ok and symmetry.count_symmetric("noncrossing", n) == expected
    yield "symmetric-census n<=5", ok


def _cmd_verify(args) -> int:
    failed = False
    for name, ok in _verify_checks(args.max_nodes, args.order):
        if args.format == "jsonl":
            print(json.dumps({"check": name, "pass": ok}))
        else:
            print(f"{'PASS' if ok else 'FAIL'} {name}")
        failed = failed or not ok
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("text", "jsonl"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betatrees",
        description="Labeled plane trees, their involution, and rooted planar maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-trees", help="enumerate all valid trees of a size")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the count")
    _add_format(p)
    p.set_defaults(handler=_cmd_gen_trees)

    p = sub.add_parser("stats", help="the four statistics of a tree")
    p.add_argument("--tree", help="tree text; omit to read lines from stdin")
    _add_format(p)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("apply-h", help="apply the involution")
    p.add_argument("--tree")
    _add_format(p)
    p.set_defaults(handler=_cmd_apply_h)

    p = sub.add_parser("fixed-points", help="enumerate fixed trees of a size")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--classify", action="store_true", help="append structure tags")
    _add_format(p)
    p.set_defaults(handler=_cmd_fixed_points)

    p = sub.add_parser("classify", help="structure of a fixed tree")
    p.add_argument("--tree")
    _add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("build-f1", help="build the F1 fixed tree over a base tree")
    p.add_argument("--tree", required=True)
    p.set_defaults(handler=_cmd_build_f1)

    p = sub.add_parser("build-f2", help="build the F2 fixed tree from (a1, a2, b)")
    p.add_argument("--a1", required=True)
    p.add_argument("--a2", required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(handler=_cmd_build_f2)

    p = sub.add_parser("series", help="verify census identities or dump tables")
    p.add_argument("--check", choices=SERIES_CHECKS + ("all",))
    p.add_argument("--dump", choices=("A", "B", "u", "T"))
    p.add_argument("--order", type=int, default=0, help="truncation order")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("tree-to-map", help="map image of a tree (JSON)")
    p.add_argument("--tree")
    p.set_defaults(handler=_cmd_tree_to_map)

    p = sub.add_parser("dual", help="dual of a rooted map (JSON in, JSON out)")
    p.add_argument("--map", help="map JSON; omit to read lines from stdin")
    p.set_defaults(handler=_cmd_dual)

    p = sub.add_parser("self-dual", help="census of self-dual images by edges")
    p.add_argument("--edges", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_self_dual)

    p = sub.add_parser("bijection-audit", help="injectivity and degree-law audit")
    p.add_argument("--nodes", type=int, default=8)
    p.set_defaults(handler=_cmd_bijection_audit)

    p = sub.add_parser("symmetric", help="total and symmetric counts of a family")
    p.add_argument(
        "--family", choices=tuple(sorted(symmetry.BUDGETS)), required=True
    )
    p.add_argument("--size", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_symmetric)

    p = sub.add_parser("verify", help="run every check; exit 1 on any failure")
    p.add_argument("--all", action="store_true", help="run the full battery (default)")
    p.add_argument("--max-nodes", type=int, default=10)
    p.add_argument("--order", type=int, default=10, help="bivariate series order")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, tree.TreeParseError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
