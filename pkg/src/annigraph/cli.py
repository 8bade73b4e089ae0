"""Command-line front end: ``annigraph {info,dim,verify,graph,distance}``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import ag_graph
from .errors import AnnigraphError
from .formulas import dim_bounds
from .harness import (
    DEFAULT_EXACT_CAP,
    MISMATCH,
    make_report,
    reports_to_csv,
    run_sweep,
    sweep_grid,
)
from .ring_model import RingSpec, parse_ideal, parse_spec, spec_from_modulus


def _add_ring_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec", help='chain-ring orders, e.g. "2,1,3"')
    group.add_argument("--zn", type=int, metavar="N", help="use the ring Z/N")


def _ring(args) -> RingSpec:
    if args.zn is not None:
        return spec_from_modulus(args.zn)
    return parse_spec(args.spec)


def cmd_info(args) -> int:
    spec = _ring(args)
    b = dim_bounds(spec)
    info = {
        "spec": list(spec.orders),
        "beta": b.beta,
        "case": b.case.value,
        "vertices": spec.vertex_count(),
        "lower": b.lower,
        "upper": b.upper,
        "epsilon": b.epsilon,
        "exact": b.exact,
    }
    if args.json:
        print(json.dumps(info))
        return 0
    print(f"spec:     {spec}")
    print(f"beta:     {b.beta}")
    print(f"case:     {b.case.value}")
    print(f"vertices: {info['vertices']}")
    if b.exact is not None:
        print(f"dim:      {b.exact} (exact)")
    else:
        print(f"dim:      in [{b.lower}, {b.upper}] (epsilon = {b.epsilon})")
    return 0


def cmd_dim(args) -> int:
    spec = _ring(args)
    report = make_report(
        spec,
        exact=args.exact,
        construct=args.construct,
        certificate=args.certificate,
        oracle=args.oracle,
        exact_cap=args.exact_cap,
    )
    print(json.dumps(report.to_json(), indent=2))
    return 1 if report.verdict == MISMATCH else 0


def cmd_verify(args) -> int:
    specs = sweep_grid(args.max_factors, args.max_order, args.max_vertices, args.ordered)
    reports = run_sweep(specs, jobs=args.jobs)
    text = reports_to_csv(reports, timings=args.timings)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    bad = [r for r in reports if r.verdict == MISMATCH]
    for r in bad:
        print(f"MISMATCH {r.spec}: {'; '.join(r.problems)}", file=sys.stderr)
    print(f"{len(reports)} specs checked, {len(bad)} mismatches", file=sys.stderr)
    return 1 if bad else 0


def cmd_graph(args) -> int:
    graph = ag_graph.build(_ring(args))
    data = ag_graph.export(graph, args.format)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    return 0


def cmd_distance(args) -> int:
    spec = _ring(args)
    M = parse_ideal(spec, args.m)
    L = parse_ideal(spec, args.l)
    d, branch = ag_graph.distance_branch(spec, M, L)
    if args.oracle == "bfs":
        graph = ag_graph.build(spec)
        d_bfs = ag_graph.distance_bfs(graph, M, L)
        print(f"{d_bfs} (bfs; closed form gives {d}, branch {branch})")
    else:
        print(f"{d} (branch {branch})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annigraph",
        description="Annihilating-ideal graphs of finite principal rings and their metric dimension.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="orders, field count, case and closed-form bounds")
    _add_ring_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("dim", help="metric dimension report")
    _add_ring_args(p)
    p.add_argument("--exact", action="store_true", help="run the exact solver")
    p.add_argument("--construct", action="store_true", help="check the explicit resolving set")
    p.add_argument("--certificate", action="store_true",
                   help="include representation tables (implies --exact)")
    p.add_argument("--oracle", choices=["closed", "bfs"], default="closed")
    p.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP,
                   help="largest vertex count the exact solver accepts")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", help="sweep a grid of specs against the closed-form values")
    p.add_argument("--max-factors", type=int, default=3)
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--ordered", action="store_true",
                   help="keep tuples that differ only in factor order")
    p.add_argument("--jobs", "--threads", dest="jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true",
                   help="fill ms_build/ms_solve (makes output non-reproducible)")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export AG(R)")
    _add_ring_args(p)
    p.add_argument("--format", choices=["dot", "csv", "json"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("distance", help="distance between two ideals, with the deciding case")
    _add_ring_args(p)
    p.add_argument("--m", required=True, help='exponent tuple, e.g. "0,1"')
    p.add_argument("--l", required=True, help='exponent tuple, e.g. "1,0"')
    p.add_argument("--oracle", choices=["closed", "bfs"], default="closed")
    p.set_defaults(func=cmd_distance)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AnnigraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
