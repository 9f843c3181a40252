"""Command-line front end: ``pretopo analyze|verify|family``.

Exit codes: 0 success, 1 counterexample or analysis failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import infinite as inf
from . import verifier
from .errors import InputError
from .graphio import read_edge_list, to_dot
from .report import Report, analyze_family, analyze_graph, family_ok, verify_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pretopo", description="Convergence analysis of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze a graph given as an edge list")
    a.add_argument("path")
    a.add_argument("--skip-exact", action="store_true", help="use greedy domination, skip spanning trees")
    a.add_argument("--json", action="store_true", help="print the JSON report")
    a.add_argument("--dot", metavar="PATH", help="write the graph as DOT")

    v = sub.add_parser("verify", help="check the theorem catalog on small graphs")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--theorem", action="append", choices=verifier.THEOREM_IDS, metavar="ID",
                   help="restrict to this id (repeatable)")
    v.add_argument("--json", action="store_true")

    f = sub.add_parser("family", help="analyze an infinite graph family")
    f.add_argument("name", help="one of: " + ", ".join(inf.catalog_names()))
    f.add_argument("--radius", type=int, default=inf.DEFAULT_RADIUS)
    f.add_argument("--json", action="store_true")
    f.add_argument("--dot", metavar="PATH", help="write the truncation as DOT")
    return parser


def _print_report(report: Report) -> None:
    print(f"{report.kind}: {report.input}")
    for key, value in report.properties.items():
        if key == "checks":
            continue
        print(f"  {key}: {value}")
    for key, msg in report.errors.items():
        print(f"  {key}: n/a ({msg})")


def cmd_analyze(args: argparse.Namespace) -> int:
    g = read_edge_list(args.path)
    report = analyze_graph(g, args.path, args.skip_exact)
    if args.dot:
        Path(args.dot).write_text(to_dot(g))
    print(report.to_json()) if args.json else _print_report(report)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise InputError("--max-n must be nonnegative")
    checks = verifier.verify_all(args.max_n, args.seed, args.theorem)
    report = verify_report(checks, args.max_n, args.seed)
    if args.json:
        print(report.to_json())
    else:
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            print(f"{mark} {c.theorem_id} n<={c.n_max} instances={c.instances} {c.elapsed:.2f}s")
            if not c.passed:
                print(f"     counterexample: {c.counterexample}")
    return EXIT_OK if report.properties["passed"] else EXIT_FAIL


def cmd_family(args: argparse.Namespace) -> int:
    fam = inf.get_family(args.name)
    report = analyze_family(fam, args.radius)
    if args.dot:
        t = inf.truncate(fam.oracle, args.radius)
        Path(args.dot).write_text(to_dot(t.graph, t.labels, name=fam.name))
    print(report.to_json()) if args.json else _print_report(report)
    return EXIT_OK if family_ok(report) else EXIT_FAIL


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "family": cmd_family}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
