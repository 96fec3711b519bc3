"""Command-line entry point: ``mincycles <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import bounds, families, harness
from .cycles import count_cycles, count_paths
from .eulerian import theorem6_verdict
from .gf2 import format_code, minimal_report, parse_code, random_code_experiment
from .graph import cycle_code, format_graph, parse_graph, properties

log = logging.getLogger("mincycles")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: Optional[str]):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        log.info("wrote %s", out)


def cmd_code(args) -> int:
    if args.action == "random":
        if None in (args.n, args.k):
            raise ValueError("code random needs --n and --k")
        summary = random_code_experiment(args.n, args.k, args.trials, args.seed)
        print(json.dumps(summary, indent=2, default=str))
        return 0
    if args.code is None:
        raise ValueError(f"code {args.action} needs --code FILE")
    code = parse_code(_read(args.code))
    rep = minimal_report(code, list_cap=args.list_cap if args.list else 0)
    if args.action == "intersecting":
        print("true" if rep.intersecting else "false")
        return 0
    print(f"n: {code.n}")
    print(f"k: {code.k}")
    print(f"nonzero_codewords: {rep.total_codewords}")
    print(f"minimal_codewords: {rep.minimal_count}")
    print(f"intersecting: {str(rep.intersecting).lower()}")
    if args.list:
        if rep.minimal_words is None:
            log.warning("k=%d above --list-cap=%d; words not listed", code.k, args.list_cap)
        else:
            for w in rep.minimal_words:
                print(w)
    return 0


def cmd_graph(args) -> int:
    g = parse_graph(_read(args.graph))
    if args.action == "props":
        pr = properties(g)
        print(f"p: {g.p}")
        print(f"q: {g.q}")
        print(f"connected: {str(pr.connected).lower()}")
        print(f"eulerian: {str(pr.eulerian).lower()}")
        print(f"cyclomatic: {pr.cyclomatic if pr.cyclomatic is not None else 'n/a'}")
        print("degrees: " + " ".join(map(str, pr.degrees)))
    else:
        sys.stdout.write(format_code(cycle_code(g)))
    return 0


def cmd_cycles(args) -> int:
    g = parse_graph(_read(args.graph))
    res = count_cycles(g, engine=args.engine, by_length=args.by_length or None)
    print(res.total)
    if args.by_length and res.by_length is not None:
        print("length,count")
        for length, n in res.by_length.items():
            print(f"{length},{n}")
    return 0


def cmd_paths(args) -> int:
    g = parse_graph(_read(args.graph))
    print(count_paths(g, args.source, args.target))
    return 0


def cmd_bounds(args) -> int:
    if args.p is not None and args.q is not None:
        rep = bounds.bound_report(p=args.p, q=args.q)
    elif args.n is not None and args.k is not None:
        rep = bounds.bound_report(n=args.n, k=args.k)
    else:
        raise ValueError("bounds report needs --p/--q or --n/--k")
    for key, val in rep.rows():
        print(f"{key}: {val}")
    return 0


def cmd_curves(args) -> int:
    rows = bounds.figure1_table(bounds.rate_grid(args.step))
    _emit(bounds.curves_csv(rows), args.out)
    if args.figure:
        from .plotting import plot_rate_curves

        plot_rate_curves(rows, args.figure)
        log.info("wrote %s", args.figure)
    return 0


def cmd_construct(args) -> int:
    params = {k: getattr(args, k) for k in ("p", "q", "t", "r") if getattr(args, k, None) is not None}
    try:
        g = families.GENERATORS[args.family](params)
    except KeyError as exc:
        raise ValueError(f"construct {args.family} is missing --{exc.args[0]}") from None
    _emit(format_graph(g), args.out)
    return 0


def cmd_eulerian(args) -> int:
    g = parse_graph(_read(args.graph))
    v = theorem6_verdict(g)
    print(f"verdict: {v.kind}")
    print(f"cycle_count: {v.cycle_count}")
    print(f"bound: {v.bound}")
    print(f"exceeds_bound: {str(v.exceeds_bound).lower()}")
    if v.witness:
        for i, part in enumerate(v.witness):
            print(f"witness_{i}: {part}")
    return 0


def cmd_verify(args) -> int:
    rep = harness.verify(args.suite, args.samples, args.seed)
    for f in rep.failures:
        print("counterexample: " + f)
    print(rep.summary())
    return 0 if rep.ok else 1


def cmd_census(args) -> int:
    best, records = harness.search_4regular(args.p, args.trials, args.seed, verify_cap=args.verify_cap)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            harness.write_census(records, fh)
    if args.figure:
        from .plotting import plot_census

        plot_census(records, args.figure)
    print(f"p: {best.p}")
    print(f"best_cycle_count: {best.cycle_count}")
    print(f"reference_value: {best.reference_value}")
    print(f"excess: {best.cycle_count - best.reference_value}")
    print(f"verified: {'n/a' if best.verified is None else str(best.verified).lower()}")
    print(f"best_trial: {best.trial}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mincycles", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", help="binary linear codes")
    p.add_argument("action", choices=["minimal", "intersecting", "random"])
    p.add_argument("--code", help="generator-matrix file")
    p.add_argument("--list", action="store_true", help="print the minimal codewords")
    p.add_argument("--list-cap", type=int, default=16)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("graph", help="multigraph structure")
    p.add_argument("action", choices=["props", "cyclecode"])
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("cycles", help="count cycles")
    p.add_argument("action", choices=["count"])
    p.add_argument("--graph", required=True)
    p.add_argument("--engine", choices=["backtrack", "codespace"], default="backtrack")
    p.add_argument("--by-length", action="store_true")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("paths", help="count simple paths")
    p.add_argument("action", choices=["count"])
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("bounds", help="exact bound values")
    p.add_argument("action", choices=["report"])
    for name in ("p", "q", "n", "k"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("curves", help="rate-exponent curves as CSV")
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out", help="CSV path (stdout if omitted)")
    p.add_argument("--figure", help="also render the curves to this image file")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("construct", help="extremal families as edge lists")
    p.add_argument("family", choices=sorted(families.GENERATORS))
    for name in ("p", "q", "t", "r"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("eulerian", help="Eulerian bound verdict")
    p.add_argument("action", choices=["verdict"])
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("verify", help="randomized theorem checks")
    p.add_argument("suite", choices=sorted(harness.SUITES))
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="sample simple 4-regular graphs")
    p.add_argument("kind", choices=["4regular"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify-cap", type=int, default=24)
    p.add_argument("--out", help="CSV of every sampled graph")
    p.add_argument("--figure", help="histogram of sampled cycle counts")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
