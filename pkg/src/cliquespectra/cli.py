"""Command-line front end.

Exit codes: 0 success, 1 certified inequality violation or equality-census
mismatch, 2 usage or input errors (including sweep budgets), 3 iteration did
not converge.  Set CLIQUE_SPECTRA_LOG=debug (or info/warning) for logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .bounds import evaluate_bounds, multipartite_radius_formula, suite_json_dict
from .cliques import build_catalog
from .graphs import (
    Graph,
    ParseError,
    ValidationError,
    complete_multipartite,
    cycle_graph,
    gnp_random,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    petersen_graph,
    serialize_dimacs,
    serialize_edge_list,
    turan_graph,
)
from .spectral import spectral_radius
from .verify import SuiteConfig, emit_report, run_suite

log = logging.getLogger("cliquespectra")


def _read_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_spectral(args) -> int:
    g = _read_graph(args.path, args.format)
    res = spectral_radius(g, args.t, tol=args.tol, max_iter=args.max_iter)
    if args.json:
        print(json.dumps(res.to_json_dict(), indent=2))
    else:
        print(f"rho_{args.t} = {res.rho:.10f} [{res.lower!r}, {res.upper!r}]")
        print(f"iterations = {res.iterations}  converged = {str(res.converged).lower()}")
    return 0 if res.converged else 3


def cmd_bounds(args) -> int:
    g = _read_graph(args.path, args.format)
    suite = evaluate_bounds(g, args.t, spectral=not args.no_spectral, tol=args.tol,
                            eq_tol=args.eq_tol)
    if args.json:
        print(json.dumps(suite_json_dict(suite, graph_id=args.path), indent=2))
    else:
        print(f"n = {g.n}  m = {g.edge_count}  omega = {suite.catalog.omega}  "
              f"t = {args.t}  equality case: {suite.case.kind}")
        hdr = f"{'bound':24s} {'lhs':>14s} {'rhs':>14s}  ok  eq(num/struct)"
        print(hdr)
        for r in suite.reports:
            if not r.applicable:
                print(f"{r.name:24s} {'-':>14s} {'-':>14s}   -  not applicable")
                continue
            es = "-" if r.equality_structural is None else str(r.equality_structural).lower()
            print(f"{r.name:24s} {r.lhs:14.8f} {r.rhs:14.8f}  "
                  f"{'ok' if r.holds else 'VIOLATION':>2s}  "
                  f"{str(r.equality_numeric).lower()}/{es}")
    return 0 if all(r.holds for r in suite.reports) else 1


def cmd_cliques(args) -> int:
    g = _read_graph(args.path, args.format)
    cat = build_catalog(g, args.t)
    if args.json:
        print(json.dumps({"n": g.n, **cat.to_json_dict()}, indent=2))
        return 0
    print(f"n = {g.n}  t = {args.t}  omega = {cat.omega}  count = {cat.count_total}")
    print("c_t   per vertex:", list(map(int, cat.counts)))
    print("alpha per vertex:", list(map(int, cat.vertex_orders)))
    for c, a in zip(cat.cliques, cat.clique_orders):
        print(" ".join(map(str, c)), f"(alpha={int(a)})")
    return 0


def cmd_verify(args) -> int:
    collect = args.collect_rows
    if args.csv is not None and collect is None:
        collect = True
    if args.csv is not None and collect is False:
        print("--csv needs row collection; drop --no-collect-rows", file=sys.stderr)
        return 2
    cfg = SuiteConfig(
        n_max=args.n_max,
        t_values=tuple(args.t_values),
        spectral=not args.no_spectral,
        tol=args.tol,
        eq_tol=args.eq_tol,
        seed=args.seed,
        random_trials=args.random_trials,
        parallelism=args.parallelism,
        collect_rows=collect,
    ).validated()
    report = run_suite(cfg)
    mismatches = sum(v["mismatches"] for v in report.census.values())
    if args.out:
        emit_report(report, args.out, csv_path=args.csv)
    elif args.csv:
        emit_report(report, os.devnull, csv_path=args.csv)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"graphs checked:     {report.graphs_checked}")
        print(f"bounds checked:     {report.bounds_checked}")
        print(f"violations:         {report.violation_total}")
        print(f"census mismatches:  {mismatches}")
        print(f"max interval width: {report.max_interval_width:.3e}")
        print(f"nonconverged:       {report.nonconverged}")
        print(f"t2 reduction dev:   {report.t2_reduction_max_dev:.3e}")
        print(f"witness sum dev:    {report.witness_sum_max_dev:.3e}")
        if report.oracle is not None:
            print(f"oracle trials:      {report.oracle['trials']}  "
                  f"max dev {report.oracle['max_dev']:.3e}  "
                  f"enclosure failures {report.oracle['enclosure_failures']}")
        print(f"runtime:            {report.runtime_seconds:.2f}s")
    if report.violation_total > 0 or mismatches > 0:
        return 1
    if report.oracle is not None and report.oracle["enclosure_failures"] > 0:
        return 1
    if report.nonconverged > 0:
        return 3
    return 0


def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "multipartite":
        if not args.sizes:
            print("multipartite needs --sizes, e.g. --sizes 2,2,2", file=sys.stderr)
            return 2
        g = complete_multipartite(args.sizes)
        log.info("rho at t=%d is %.12f by the closed form", len(args.sizes),
                 multipartite_radius_formula(args.sizes))
    elif kind == "turan":
        if args.n is None or args.r is None:
            print("turan needs --n and --r", file=sys.stderr)
            return 2
        g = turan_graph(args.n, args.r)
    elif kind == "gnp":
        if args.n is None or args.p is None:
            print("gnp needs --n and --p", file=sys.stderr)
            return 2
        g = gnp_random(args.n, args.p, seed=args.seed)
    elif kind == "path":
        if args.n is None:
            print("path needs --n", file=sys.stderr)
            return 2
        g = path_graph(args.n)
    elif kind == "cycle":
        if args.n is None:
            print("cycle needs --n", file=sys.stderr)
            return 2
        g = cycle_graph(args.n)
    elif kind == "petersen":
        g = petersen_graph()
    else:  # argparse choices guard this
        return 2
    text = serialize_dimacs(g) if args.format == "dimacs" else serialize_edge_list(g)
    _write_text(text, args.out)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cliquespectra",
        description="clique tensor spectral radii and localized clique-count bounds",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("path", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("spectral", help="certified clique tensor spectral radius")
    add_graph_args(p)
    p.add_argument("--t", type=int, required=True, help="clique order of the tensor")
    p.add_argument("--tol", type=float, default=1e-10, help="enclosure width target")
    p.add_argument("--max-iter", type=int, default=100000)

    p = sub.add_parser("bounds", help="evaluate every applicable bound")
    add_graph_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--no-spectral", action="store_true", help="skip radius-based bounds")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--eq-tol", type=float, default=1e-6)

    p = sub.add_parser("cliques", help="t-clique catalog with extension orders")
    add_graph_args(p)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("verify", help="exhaustive sweep over all small graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-values", type=_int_list, default=[2, 3],
                   help="comma-separated clique orders, default 2,3")
    p.add_argument("--no-spectral", action="store_true",
                   help="radius-free sweep (budget rises to n_max=7)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--eq-tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-trials", type=int, default=0,
                   help="extra random-graph oracle agreement trials")
    p.add_argument("--parallelism", type=int, default=1)
    cr = p.add_mutually_exclusive_group()
    cr.add_argument("--collect-rows", dest="collect_rows", action="store_true", default=None)
    cr.add_argument("--no-collect-rows", dest="collect_rows", action="store_false")
    p.add_argument("--out", help="write the canonical JSON report here")
    p.add_argument("--csv", help="write one CSV row per evaluated inequality")
    p.add_argument("--json", action="store_true", help="print the report to stdout")

    p = sub.add_parser("generate", help="write a named graph family member")
    p.add_argument("kind", choices=("multipartite", "turan", "gnp", "path", "cycle", "petersen"))
    p.add_argument("--sizes", type=_int_list, help="part sizes for multipartite")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--out", help="output file, default stdout")

    return ap


_COMMANDS = {
    "spectral": cmd_spectral,
    "bounds": cmd_bounds,
    "cliques": cmd_cliques,
    "verify": cmd_verify,
    "generate": cmd_generate,
}


def main(argv=None) -> int:
    level = os.environ.get("CLIQUE_SPECTRA_LOG")
    if level:
        logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValidationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
