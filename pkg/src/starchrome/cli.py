"""Command-line interface.

Subcommands: solve, verify-figures, family-check, sweep, encode, decode.
Exit codes: 0 success, 1 input/parse/data errors, 2 solver budget
exhausted (bounds printed), 3 sweep found a proven-bound violation.
"""

from __future__ import annotations

import argparse
import sys

from .errors import BudgetExhausted, StarchromeError
from .families import FAMILY_IDS, build_family
from .graph6 import graph6_decode, graph6_encode
from .graph import from_edges
from .harness import family_check, verify_figures
from .solver import Budget, exact_chi_star
from .sweep import ResultCache, default_cache_path, run_sweep


def _budget(args: argparse.Namespace) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_secs)


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget-nodes", type=int, default=Budget.max_nodes)
    parser.add_argument("--budget-secs", type=float, default=Budget.max_seconds)


def _input_graph(args: argparse.Namespace):
    if args.g6:
        return graph6_decode(args.g6)
    if args.family:
        params = {}
        if args.n is not None:
            params["n"] = args.n
        if args.delta is not None:
            params["delta"] = args.delta
        if args.blocks is not None:
            params["blocks"] = args.blocks
        return build_family(args.family, **params).graph
    raise StarchromeError("provide --g6 or --family")


def cmd_solve(args: argparse.Namespace) -> int:
    g = _input_graph(args)
    try:
        result = exact_chi_star(g, _budget(args), edge_limit=args.edge_limit)
    except BudgetExhausted as exc:
        print(f"budget exhausted: chi_star in [{exc.lower_bound}, {exc.upper_bound}]")
        print(f"nodes={exc.nodes} elapsed={exc.elapsed:.2f}s")
        return 2
    print(f"chi_star = {result.chi}")
    for (u, v), color in result.witness.as_mapping().items():
        print(f"  {u}-{v}: {color}")
    print(f"nodes={result.nodes_expanded} elapsed={result.elapsed:.3f}s")
    return 0


def cmd_verify_figures(args: argparse.Namespace) -> int:
    reports = verify_figures()
    findings = 0
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        if not rep.passed:
            findings += 1
        extra = f" first_witness={rep.first_witness}" if rep.first_witness else ""
        print(f"{status} {rep.figure_id}: palette={rep.palette} claimed={rep.claimed_palette}{extra}")
        lines.append(rep.to_json())
    print(f"figures={len(reports)} findings={findings}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_family_check(args: argparse.Namespace) -> int:
    family = args.family.lower().replace("-", "_")
    rows = family_check(family, _parse_range(args.range), exact=args.exact, budget=_budget(args))
    lines = []
    for row in rows:
        status = "PASS" if row.passed else "FAIL"
        exact = ""
        if row.chi_star is not None:
            exact = f" chi_star={row.chi_star}"
        elif row.chi_bounds is not None:
            exact = f" chi_star in {list(row.chi_bounds)}"
        print(
            f"{status} {row.family} delta={row.delta}: palette={row.palette} "
            f"claimed={row.claimed_palette}{exact}"
        )
        lines.append(row.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cache_path = args.cache or default_cache_path()
    try:
        cache = ResultCache(cache_path)
    except OSError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return 1
    summary = run_sweep(
        args.n_max,
        cache,
        budget=_budget(args),
        expand_subgraphs=args.expand_subgraphs,
        workers=args.workers,
    )
    if args.out:
        with open(args.out, "w") as fh:
            for rec in summary.records:
                fh.write(rec.to_json() + "\n")
    print(
        f"records={len(summary.records)} solved={summary.solved} "
        f"cached={summary.from_cache} budget_exhausted={summary.budget_exhausted}"
    )
    for key, msg in summary.findings:
        print(f"FINDING {key}: {msg}")
    for key, msg in summary.hard_failures:
        print(f"HARD FAILURE {key}: {msg}")
    print(f"hard_failures={len(summary.hard_failures)} findings={len(summary.findings)}")
    return 3 if summary.hard_failures else 0


def _parse_edges(text: str) -> list[tuple[int, int]]:
    if not text.strip():
        return []
    out = []
    for part in text.split(","):
        u, v = part.strip().split("-")
        out.append((int(u), int(v)))
    return out


def cmd_encode(args: argparse.Namespace) -> int:
    g = from_edges(args.n, _parse_edges(args.edges))
    print(graph6_encode(g))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    g = graph6_decode(args.g6)
    edges = ",".join(f"{u}-{v}" for u, v in g.edges)
    print(f"n={g.n} edges={edges}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starchrome")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact star chromatic index of one graph")
    p.add_argument("--g6")
    p.add_argument("--family", choices=FAMILY_IDS)
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--blocks", type=int)
    p.add_argument("--edge-limit", type=int, default=40,
                   help="solver edge ceiling; raise at your own risk")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify-figures", help="validate every cataloged figure coloring")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_figures)

    p = sub.add_parser("family-check", help="validate a family's closed-form coloring")
    p.add_argument("family", help="h_prime, h_case1 or h2 (spelling h-prime/H2 accepted)")
    p.add_argument("range", help="a delta or a range like 9..14")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--out")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_family_check)

    p = sub.add_parser("sweep", help="enumerate, solve and bound-check small MOPs")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--expand-subgraphs", action="store_true")
    p.add_argument("--cache")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("encode", help="edge list to graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", default="", help='comma list like "0-1,1-2"')
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="graph6 to edge list")
    p.add_argument("--g6", required=True)
    p.set_defaults(func=cmd_decode)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StarchromeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
