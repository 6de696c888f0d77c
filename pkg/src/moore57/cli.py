"""Command-line surface: deterministic, machine-readable output.

Subcommands: pnums, blocks (list | build | enumerate | summary), verify,
grid-oracle, search, report.  Exit codes: 0 success / verified, 1
verification failure, 2 usage error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blocks, constraints as cons_mod, drg, grid, lattice, permsearch, solver

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FORMATS = ("table", "json", "tsv")


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_text(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _tsv_rows(rows) -> str:
    return "\n".join("\t".join(str(v) for v in row) for row in rows)


def _parse_array(text: str) -> drg.IntersectionArray:
    try:
        return drg.IntersectionArray.parse(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def _pnums_for(args) -> drg.IntersectionNumbers:
    arr = _parse_array(args.array)
    try:
        return drg.intersection_numbers(arr)
    except (drg.NonIntegralMultiplicity, drg.InfeasibleArray) as exc:
        print(f"error: infeasible array: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VERIFY_FAILED) from None


def cmd_pnums(args) -> int:
    nums = _pnums_for(args)
    k = drg.multiplicities(nums.array)
    deviations = (
        drg.published_deviations(nums) if str(nums.array) == str(drg.MOORE57_ARRAY) else []
    )
    if args.format == "json":
        data = {
            "array": str(nums.array),
            "k": list(k),
            "p": {str(Z): [list(r) for r in nums.core(Z)] for Z in (1, 2, 3)},
            "diagnostics": [d.describe() for d in deviations],
        }
        _emit(_json_text(data), args.output)
    elif args.format == "tsv":
        rows = [("k",) + k]
        for Z in (1, 2, 3):
            for X, row in enumerate(nums.core(Z), start=1):
                rows.append((f"p{Z}", X) + row)
        _emit(_tsv_rows(rows), args.output)
    else:
        lines = [f"array [{nums.array}]", "k = " + " ".join(map(str, k)), ""]
        for Z in (1, 2, 3):
            lines.append(f"p^{Z}:")
            for row in nums.core(Z):
                lines.append("  " + " ".join(f"{v:5d}" for v in row))
            lines.append("")
        for d in deviations:
            lines.append(f"note: {d.describe()}")
        _emit("\n".join(lines).rstrip() + "\n", args.output)
    return EXIT_OK


def _resolve_blocks(label: str):
    if label == "all":
        return blocks.canonical_blocks()
    try:
        block = blocks.parse_block(label)
    except blocks.OutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None
    if block not in blocks.canonical_blocks():
        print(f"error: {label} is not one of the 8 canonical blocks", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return [block]


def cmd_blocks_list(args) -> int:
    rows = []
    for b in blocks.canonical_blocks():
        rows.append(
            {
                "block": blocks.block_label(b),
                "orbit_size": len(blocks.orbit(b)),
                "forced_zero": sorted(blocks.forced_zero_variables(b)),
                "x333": cons_mod.x333_value(b),
            }
        )
    if args.format == "json":
        _emit(_json_text(rows), args.output)
    elif args.format == "tsv":
        out = [(r["block"], r["orbit_size"], r["x333"],
                ",".join(map(str, r["forced_zero"]))) for r in rows]
        _emit(_tsv_rows([("block", "orbit", "x333", "forced_zero")] + out), args.output)
    else:
        lines = ["block  orbit  x(3,3,3)  forced-zero variables"]
        for r in rows:
            lines.append(
                f"{r['block']:>5}  {r['orbit_size']:>5}  {r['x333']:>8}  "
                + ",".join(map(str, r["forced_zero"]))
            )
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def cmd_blocks_build(args) -> int:
    pnums = _pnums_for(args)
    out = []
    for b in _resolve_blocks(args.block):
        system = blocks.build_system(b, pnums)
        cons = cons_mod.assemble(b)
        out.append(
            {
                "block": blocks.block_label(b),
                "rhs": list(system.rhs),
                "forced_zero": sorted(system.forced_zero),
                "constraints": cons.to_records(),
            }
        )
    if args.format == "json":
        _emit(_json_text(out), args.output)
    elif args.format == "tsv":
        rows = []
        for rec in out:
            rows.append((rec["block"], "rhs") + tuple(rec["rhs"]))
            rows.append((rec["block"], "forced_zero") + tuple(rec["forced_zero"]))
        _emit(_tsv_rows(rows), args.output)
    else:
        lines = []
        for rec in out:
            lines.append(f"block {rec['block']}")
            lines.append("  rhs: " + " ".join(map(str, rec["rhs"])))
            lines.append("  forced zero: " + " ".join(map(str, rec["forced_zero"])))
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _load_expected():
    from importlib import resources

    with resources.files("moore57.data").joinpath("expected_solutions.json").open() as fh:
        return json.load(fh)


def cmd_blocks_enumerate(args) -> int:
    pnums = _pnums_for(args)
    results = [solver.enumerate_block(b, pnums) for b in _resolve_blocks(args.block)]
    mismatches = []
    if args.check:
        expected = _load_expected()
        for res in results:
            label = blocks.block_label(res.block)
            want = sorted(tuple(t) for t in expected["tuples"][label])
            got = sorted(res.tuples)
            if got != want:
                mismatches.append(label)
    if args.format == "json":
        data = [r.to_json_dict() for r in results]
        if args.check:
            data = {"results": data, "mismatches": mismatches}
        _emit(_json_text(data), args.output)
    elif args.format == "tsv":
        rows = []
        for r in results:
            label = blocks.block_label(r.block)
            for t, s in zip(r.tuples, r.solutions):
                rows.append((label,) + t + s)
        _emit(_tsv_rows(rows), args.output)
    else:
        lines = []
        for r in results:
            lines.append(f"block {blocks.block_label(r.block)}: {r.count} solutions")
            lines.append("  base: " + blocks.serialize_solution(r.base))
            lines.append("  coefficient tuples (a b c d a' b' c' d'):")
            for t in r.tuples:
                lines.append("    " + " ".join(f"{v:3d}" for v in t))
        if mismatches:
            lines.append("MISMATCH against stored listings: " + ", ".join(mismatches))
        _emit("\n".join(lines), args.output)
    return EXIT_VERIFY_FAILED if mismatches else EXIT_OK


def cmd_blocks_summary(args) -> int:
    pnums = _pnums_for(args)
    counts = solver.summary(pnums)
    failed = False
    expected = None
    if args.check:
        expected = drg.load_published_tables()["solution_counts"]
        failed = counts != expected
    if args.format == "json":
        data = {"counts": counts}
        if args.check:
            data["expected"] = expected
            data["match"] = not failed
        _emit(_json_text(data), args.output)
    elif args.format == "tsv":
        rows = [("block",) + tuple(counts), ("count",) + tuple(counts.values())]
        _emit(_tsv_rows(rows), args.output)
    else:
        # column order of the published summary table, for eyeball diffing
        labels = ["333", "211", "221", "321", "331", "322", "222", "332"]
        lines = [
            "Block  " + "  ".join(f"{v:>4}" for v in labels),
            "Count  " + "  ".join(f"{counts[v]:>4}" for v in labels),
            f"Total  {sum(counts.values())}",
        ]
        if args.check:
            lines.append("check: " + ("ok" if not failed else f"MISMATCH, expected {expected}"))
        _emit("\n".join(lines), args.output)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _parse_range(text: str) -> range:
    try:
        a, b = (int(v) for v in text.split(":"))
    except ValueError:
        print(f"error: range must look like 5:10, got {text!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None
    if a > b:
        print(f"error: empty range {text!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return range(a, b + 1)


def cmd_verify(args) -> int:
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str = ""):
        checks.append((name, ok, detail))

    pnums = _pnums_for(args)
    M = blocks.coefficient_matrix()
    rank = lattice.exact_rank(M)
    check("rank(M) == 19", rank == 19, f"rank={rank}")
    basis = lattice.null_basis()
    resid = all(
        all(sum(M[r][c] * v[c] for c in range(27)) == 0 for r in range(27))
        for v in basis
    )
    check("null basis residuals", resid)
    check("basis stack rank == 8", lattice.exact_rank([list(v) for v in basis]) == 8)

    if args.fixtures:
        with open(args.fixtures, encoding="utf-8") as fh:
            fixtures = json.load(fh)
    else:
        from importlib import resources

        with resources.files("moore57.data").joinpath("fixtures.json").open() as fh:
            fixtures = json.load(fh)
    for label in sorted(fixtures):
        block = blocks.parse_block(label)
        system = blocks.build_system(block, pnums)
        cons = cons_mod.assemble(block)
        report = solver.verify_solution(system, cons, tuple(fixtures[label]))
        check(f"fixture {label}", report.ok, report.describe())

    for n in _parse_range(args.grid_range):
        vals = {
            "222": grid.pattern_count(n, (2, 2, 2)),
            "322": grid.pattern_count(n, (3, 2, 2)),
            "332": grid.pattern_count(n, (3, 3, 2)),
            "333": grid.pattern_count(n, (3, 3, 3)),
        }
        ok = vals == {"222": 0, "322": 1, "332": 0, "333": n - 3}
        check(f"grid pattern counts n={n}", ok, str(vals))
        u, v = (1, 1), (2, 2)
        check(f"grid pair candidates n={n}", grid.pair_candidates(n, u, v) == 2)

    failed = [c for c in checks if not c[1]]
    if args.format == "json":
        data = {
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks],
            "ok": not failed,
        }
        _emit(_json_text(data), args.output)
    else:
        lines = [
            f"{'ok ' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail and not ok else "")
            for name, ok, detail in checks
        ]
        lines.append("all checks passed" if not failed else f"{len(failed)} check(s) failed")
        _emit("\n".join(lines), args.output)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_grid_oracle(args) -> int:
    n = args.n
    if n < grid.MIN_SIDE:
        print(f"error: grid side must be >= {grid.MIN_SIDE}", file=sys.stderr)
        return EXIT_USAGE
    patterns = (
        [tuple(int(c) for c in args.pattern)]
        if args.pattern
        else [(2, 2, 2), (3, 2, 2), (3, 3, 2), (3, 3, 3)]
    )
    data = {"n": n, "patterns": {}}
    try:
        for p in patterns:
            u, v, w = grid.place_pattern(n, p)
            data["patterns"]["".join(map(str, p))] = {
                "placement": [list(u), list(v), list(w)],
                "common_linemates": grid.common_linemates(n, u, v, w),
            }
    except grid.Unrealizable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    data["pair_candidates"] = {
        "noncollinear": grid.pair_candidates(n, (1, 1), (2, 2)),
        "collinear": grid.pair_candidates(n, (1, 1), (1, 2)),
    }
    if args.format == "tsv":
        rows = [(k, v["common_linemates"]) for k, v in sorted(data["patterns"].items())]
        _emit(_tsv_rows(rows), args.output)
    elif args.format == "table":
        lines = [f"n = {n}"]
        for k, v in sorted(data["patterns"].items()):
            lines.append(f"pattern {k}: common line-mates {v['common_linemates']}")
        pc = data["pair_candidates"]
        lines.append(f"pair candidates: noncollinear {pc['noncollinear']}, collinear {pc['collinear']}")
        _emit("\n".join(lines), args.output)
    else:
        _emit(_json_text(data), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.degree < 2:
        print("error: degree must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if args.naive:
        outcome = permsearch.naive_search(args.degree)
    else:
        budget = permsearch.SearchBudget(
            max_nodes=args.budget_nodes, max_seconds=args.budget_seconds
        )
        outcome = permsearch.search(
            args.degree, budget=budget, seed=args.seed, normalize=not args.no_normalize
        )
    data = outcome.to_json_dict()
    if args.format == "table":
        lines = [f"degree {outcome.degree}: {outcome.status} ({outcome.nodes} nodes)"]
        if outcome.system is not None:
            lines.append("system: " + outcome.system.to_json())
            lines.append(f"moore check: {outcome.moore_diag}")
        _emit("\n".join(lines), args.output)
    else:
        _emit(_json_text(data), args.output)
    if args.edges and outcome.graph is not None:
        with open(args.edges, "w", encoding="utf-8") as fh:
            fh.write(outcome.graph.to_edge_list() + "\n")
    if outcome.status == permsearch.STATUS_BUDGET:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_report(args) -> int:
    report = solver.block221_report()
    if args.format == "table":
        lines = [f"block {report['block']}: {report['solution_count']} solutions"]
        for row in report["rows"]:
            lines.append(
                f"  x(3,3,1) = {row['x331']}   x(2,2,1) = {row['x221']}   "
                f"x(1,3,2) = {row['x132']}"
            )
        for name, ok in report["checks"].items():
            lines.append(f"{'ok ' if ok else 'FAIL'} {name}")
        _emit("\n".join(lines), args.output)
    else:
        _emit(_json_text(report), args.output)
    return EXIT_OK if report["ok"] else EXIT_VERIFY_FAILED


def _add_common(p, array=True):
    if array:
        p.add_argument("--array", default=str(drg.MOORE57_ARRAY),
                       help="intersection array b0,b1,b2;c1,c2,c3")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--output", default=None, help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moore57",
        description="Exact-integer workbench for the degree-57 Moore graph analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pnums", help="intersection numbers and shell sizes")
    _add_common(p)
    p.set_defaults(func=cmd_pnums)

    pb = sub.add_parser("blocks", help="block systems and their solutions")
    bsub = pb.add_subparsers(dest="subcommand", required=True)

    p = bsub.add_parser("list", help="the 8 canonical blocks")
    _add_common(p, array=False)
    p.set_defaults(func=cmd_blocks_list)

    p = bsub.add_parser("build", help="right-hand sides and constraints")
    p.add_argument("block", help="canonical block label like 322, or 'all'")
    _add_common(p)
    p.set_defaults(func=cmd_blocks_build)

    p = bsub.add_parser("enumerate", help="every constrained solution")
    p.add_argument("block", help="canonical block label like 221, or 'all'")
    p.add_argument("--check", action="store_true",
                   help="compare against the stored listings; exit 1 on mismatch")
    _add_common(p)
    p.set_defaults(func=cmd_blocks_enumerate)

    p = bsub.add_parser("summary", help="solution counts per canonical block")
    p.add_argument("--check", action="store_true",
                   help="compare against the published table; exit 1 on mismatch")
    _add_common(p)
    p.set_defaults(func=cmd_blocks_summary)

    p = sub.add_parser("verify", help="fixtures, null space and grid oracle checks")
    _add_common(p)
    p.add_argument("--grid-range", default="5:10", help="inclusive n range, like 5:10")
    p.add_argument("--fixtures", default=None, help="alternate fixtures JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grid-oracle", help="rook's-grid counting checks")
    p.add_argument("--n", type=int, default=56, help="grid side (default 56)")
    p.add_argument("--pattern", default=None,
                   help="collinearity pattern over {2,3}, e.g. 322")
    _add_common(p, array=False)
    p.set_defaults(func=cmd_grid_oracle)

    p = sub.add_parser("search", help="permutation-system existence search")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--seed", type=int, default=None,
                   help="shuffle the try order (budgeted exploration)")
    p.add_argument("--naive", action="store_true",
                   help="unpruned product enumeration (tiny degrees only)")
    p.add_argument("--no-normalize", action="store_true",
                   help="search without the identity normalization")
    p.add_argument("--edges", default=None,
                   help="write the found Moore graph as an edge list")
    _add_common(p, array=False)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="block 221 cross-checks")
    _add_common(p, array=False)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (solver.InfeasibleBlock, solver.UnboundedLattice, blocks.NegativeRhs) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
