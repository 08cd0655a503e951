"""Command-line interface.

Subcommands: ``compute`` (CIS polynomial and means of one graph),
``verify`` (lemma sweeps over generated block graphs), ``search``
(extremal scans), ``family`` (seeded attachment-family checks), and
``ktree`` (sub-k-tree formula against its oracle).

Exit codes: 0 success, 1 a mathematical verdict failed, 2 usage or input
error, 3 precondition violation (e.g. disconnected input).  Output is
byte-identical across runs and worker counts for a fixed seed and input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .blocks import is_block_graph
from .cis import local_mean, mean, mu, phi
from .drivers import (
    FAMILY_KINDS,
    run_family_checks,
    sampled_ktree_checks,
    summarize_verdicts,
    sweep_block_graphs,
    tree_bridge_checks,
)
from .graphs import EdgeListParseError, GraphError, parse_edge_list
from .lemmas import BLOCK_GRAPH_STATEMENTS
from .search import CSV_HEADER, canonical_cert, check_max_conjecture, \
    check_min_theorem, extremal_scan, path_graph

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

BLOCK_SCAN_CAP = 10
BLOCK_SCAN_CAP_LONG = 11
CONNECTED_SCAN_CAP = 7
CONNECTED_SCAN_CAP_LONG = 8


def _fmt_fraction(fr: Fraction) -> str:
    return "%s (%.6f)" % (fr, float(fr))


def _print_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _cache_dir() -> str | None:
    return os.environ.get("BLOCKMEAN_CACHE_DIR") or None


# -- compute -----------------------------------------------------------------


def cmd_compute(args) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print("error: cannot read input: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        g = parse_edge_list(text)
    except EdgeListParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if g.n == 0 or not g.is_connected():
        print("error: input graph is disconnected", file=sys.stderr)
        return EXIT_PRECONDITION

    p = phi(g)
    rep = mean(g)
    per_vertex = []
    for v in range(g.n):
        loc = local_mean(g, v)
        mv = mu(g, v) if g.n >= 2 else None
        per_vertex.append((v, loc, mv))

    if args.format == "json":
        payload = {
            "n": g.n,
            "m": g.edge_count(),
            "block_graph": is_block_graph(g),
            "phi": p.to_json(),
            "N": str(rep.N),
            "W": str(rep.W),
            "M": {"num": str(rep.M.numerator), "den": str(rep.M.denominator)},
            "M_decimal": "%.6f" % float(rep.M),
            "vertices": [
                {
                    "v": v,
                    "local_M": {"num": str(loc.M.numerator), "den": str(loc.M.denominator)},
                    "mu": None if mv is None else
                    {"num": str(mv.numerator), "den": str(mv.denominator)},
                }
                for v, loc, mv in per_vertex
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        rows = [[str(v), str(loc.N), str(loc.W),
                 str(loc.M.numerator), str(loc.M.denominator),
                 "" if mv is None else str(mv.numerator),
                 "" if mv is None else str(mv.denominator)]
                for v, loc, mv in per_vertex]
        _print_csv(["v", "N_v", "W_v", "M_v_num", "M_v_den", "mu_num", "mu_den"], rows)
    else:
        print("order n = %d, size m = %d, block graph: %s"
              % (g.n, g.edge_count(), "yes" if is_block_graph(g) else "no"))
        print("phi coefficients (by order): %s" % list(p.coeffs))
        print("N = %d   W = %d   M = %s" % (rep.N, rep.W, _fmt_fraction(rep.M)))
        for v, loc, mv in per_vertex:
            mu_part = "-" if mv is None else _fmt_fraction(mv)
            print("  v=%d: local M = %s   mu = %s" % (v, _fmt_fraction(loc.M), mu_part))
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    statements = None
    if args.statement:
        if args.statement not in BLOCK_GRAPH_STATEMENTS:
            print("error: unknown statement %r (choose from %s)"
                  % (args.statement, ", ".join(BLOCK_GRAPH_STATEMENTS)), file=sys.stderr)
            return EXIT_USAGE
        statements = [args.statement]
    rows = sweep_block_graphs(args.max_n, statements, _cache_dir(), args.workers)
    failed = [(cert, v) for cert, v in rows if v.failed]

    if args.format == "csv":
        out = [[cert, v.statement, str(v.holds),
                "" if v.equality is None else str(v.equality),
                "" if v.lhs is None else str(v.lhs),
                "" if v.rhs is None else str(v.rhs)]
               for cert, v in rows]
        _print_csv(["cert", "statement", "holds", "equality", "lhs", "rhs"], out)
    elif args.format == "json":
        summary = summarize_verdicts(rows)
        payload = {
            "max_n": args.max_n,
            "verdicts": len(rows),
            "failed": len(failed),
            "by_statement": summary,
            "failures": [dict(cert=c, **v.to_json()) for c, v in failed],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        summary = summarize_verdicts(rows)
        print("lemma sweep over connected block graphs, orders 1..%d" % args.max_n)
        for name in sorted(summary):
            s = summary[name]
            print("  %-20s total=%-6d applicable=%-6d equality=%-5d failed=%d"
                  % (name, s["total"], s["applicable"], s["equality"], s["failed"]))
        print("failed verdicts: %d" % len(failed))
        for cert, v in failed:
            print("  FAIL %s %s witness=%s lhs=%s rhs=%s"
                  % (v.statement, cert, v.witness, v.lhs, v.rhs))
    return EXIT_VERDICT if failed else EXIT_OK


# -- search ------------------------------------------------------------------


def _parse_range(spec: str) -> tuple[int, int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return int(lo), int(hi)
    v = int(spec)
    return v, v


def cmd_search(args) -> int:
    try:
        lo, hi = _parse_range(args.n)
    except ValueError:
        print("error: --n expects an integer or range like 3..8", file=sys.stderr)
        return EXIT_USAGE
    cap = (BLOCK_SCAN_CAP_LONG if args.long_run else BLOCK_SCAN_CAP) \
        if args.family == "block" else \
        (CONNECTED_SCAN_CAP_LONG if args.long_run else CONNECTED_SCAN_CAP)
    if lo < 1 or hi < lo:
        print("error: bad order range", file=sys.stderr)
        return EXIT_USAGE
    if hi > cap:
        print("error: order %d exceeds the %s-family cap %d%s"
              % (hi, args.family, cap,
                 "" if args.long_run else " (use --long-run to raise it)"),
              file=sys.stderr)
        return EXIT_USAGE

    cache = _cache_dir()
    results = []
    flags = []
    for n in range(lo, hi + 1):
        res = extremal_scan(args.family, n, cache, args.workers)
        path_cert = canonical_cert(path_graph(n))
        min_ok = res.min_mean == Fraction(n + 2, 3) and res.argmin == (path_cert,)
        if args.family == "block" and n >= 3:
            max_ok = check_max_conjecture(n, cache, args.workers).holds
        else:
            max_ok = None
        results.append(res)
        flags.append((min_ok, max_ok))

    if args.format == "json":
        payload = [dict(res.to_json(), min_theorem=mn,
                        max_conjecture=mx) for res, (mn, mx) in zip(results, flags)]
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        rows = [res.csv_row() + [str(mn), "" if mx is None else str(mx)]
                for res, (mn, mx) in zip(results, flags)]
        _print_csv(CSV_HEADER + ["min_theorem", "max_conjecture"], rows)
    else:
        for res, (mn, mx) in zip(results, flags):
            print("family=%s n=%d classes=%d min=%s max=%s min_theorem=%s%s"
                  % (res.family, res.n, res.count, res.min_mean, res.max_mean,
                     mn, "" if mx is None else " max_conjecture=%s" % mx))
            print("  argmin: %s" % " ".join(c.hex() for c in res.argmin))
            print("  argmax: %s" % " ".join(c.hex() for c in res.argmax))
    bad = any(mn is False or mx is False for mn, mx in flags)
    return EXIT_VERDICT if bad else EXIT_OK


# -- family ------------------------------------------------------------------


def cmd_family(args) -> int:
    kinds = FAMILY_KINDS if args.kind == "all" else (args.kind,)
    rows = []
    for kind in kinds:
        for chain in run_family_checks(kind, args.count, args.max_h, args.max_n,
                                       args.seed):
            rows.append(chain)
    bad = [c for c in rows if not c.ok]

    if args.format == "json":
        print(json.dumps([c.to_json() for c in rows], indent=2, sort_keys=True))
    elif args.format == "csv":
        out = [[c.kind, c.label, str(len(c.graphs)), str(c.graphs[0].n),
                str(c.chain_ok),
                "" if c.symmetry_ok is None else str(c.symmetry_ok),
                str(c.closed_form_ok)] for c in rows]
        _print_csv(["kind", "label", "members", "order", "chain_ok",
                    "symmetry_ok", "closed_form_ok"], out)
    else:
        for c in rows:
            print("%-17s %-40s order=%-3d chain=%s symmetry=%s closed=%s"
                  % (c.kind, c.label, c.graphs[0].n, c.chain_ok,
                     c.symmetry_ok, c.closed_form_ok))
        print("instances: %d, failing: %d" % (len(rows), len(bad)))
    return EXIT_VERDICT if bad else EXIT_OK


# -- ktree -------------------------------------------------------------------


def cmd_ktree(args) -> int:
    rows = tree_bridge_checks(args.trees_max_n, _cache_dir(), args.workers)
    rows += sampled_ktree_checks(args.samples, (2, 3), args.sample_max_n, args.seed)
    bad = [r for r in rows if not r.agree]

    if args.format == "json":
        print(json.dumps([r.to_json() for r in rows], indent=2, sort_keys=True))
    elif args.format == "csv":
        out = [[r.kind, str(r.k), str(r.n),
                str(r.formula.numerator), str(r.formula.denominator),
                str(r.oracle.numerator), str(r.oracle.denominator),
                str(r.agree)] for r in rows]
        _print_csv(["kind", "k", "n", "formula_num", "formula_den",
                    "oracle_num", "oracle_den", "agree"], out)
    else:
        for r in rows:
            print("%-7s k=%d n=%-3d formula=%-12s oracle=%-12s agree=%s"
                  % (r.kind, r.k, r.n, r.formula, r.oracle, r.agree))
        print("checks: %d, disagreements: %d" % (len(rows), len(bad)))
    return EXIT_VERDICT if bad else EXIT_OK


# -- wiring --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockmean",
        description="Exact CIS polynomials, lemma sweeps, and extremal scans "
                    "over connected block graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("table", "json", "csv"),
                       default="table", help="output format")
        p.add_argument("--workers", type=int, default=1,
                       help="worker processes for sweeps and scans")
        p.add_argument("--seed", type=int, default=0, help="random seed")

    p = sub.add_parser("compute", help="CIS report for one edge-list graph")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    common(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("verify", help="lemma sweep over generated block graphs")
    p.add_argument("--max-n", type=int, default=7, help="largest order to sweep")
    p.add_argument("--statement", help="restrict to one statement")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="extremal scan over a graph family")
    p.add_argument("--family", choices=("block", "connected"), required=True)
    p.add_argument("--n", required=True, help="order or range, e.g. 3..8")
    p.add_argument("--long-run", action="store_true",
                   help="raise the order caps (slow)")
    common(p)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("family", help="seeded attachment-family chain checks")
    p.add_argument("--kind", choices=FAMILY_KINDS + ("all",), default="all")
    p.add_argument("--count", type=int, default=50, help="instances per kind")
    p.add_argument("--max-h", type=int, default=8, help="largest attached graph")
    p.add_argument("--max-n", type=int, default=12, help="largest path parameter")
    common(p)
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("ktree", help="sub-k-tree formula versus brute oracle")
    p.add_argument("--trees-max-n", type=int, default=8,
                   help="check every tree up to this order")
    p.add_argument("--samples", type=int, default=50,
                   help="random 2-/3-tree samples")
    p.add_argument("--sample-max-n", type=int, default=10,
                   help="largest sampled k-tree order")
    common(p)
    p.set_defaults(fn=cmd_ktree)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GraphError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
