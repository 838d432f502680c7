"""Command-line interface.

Machine-readable output goes to stdout as one JSON object per line (CSV for
``bench``); diagnostics go to stderr. Exit codes: 0 success, 1 invalid
input or certificate, 2 negative solver result (UNSAT, no route, heuristic
failure), 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import formats
from .certify import Certificate
from .config import BRUTE_FORCE_CAP, exact_cap
from .degenerate import STRATEGIES, SplitterConfig, equitable_forests, plan_route
from .extend import extend_partition
from .errors import (
    BudgetExceeded,
    CapExceeded,
    EquitabilityDrift,
    HeuristicFailure,
    InvalidColoring,
    InvalidPartition,
    NoRoute,
)
from .generators import FAMILIES, generate
from .graph import Graph, GraphError, Orientation, degeneracy
from .oracle import DEFAULT_NODE_BUDGET, brute_force_equitable

EXIT_OK, EXIT_INVALID, EXIT_NEGATIVE, EXIT_BUDGET = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _emit(obj: dict, out: str | None = None) -> None:
    line = json.dumps(obj)
    if out:
        Path(out).write_text(line + "\n")
    else:
        print(line, flush=True)


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (a file or a generator spec)")
    src.add_argument("--graph", help="graph file (.g6, .edges, .arcs)")
    src.add_argument("--format", choices=sorted(set(formats.FORMATS.values())))
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--n", type=int)
    src.add_argument("--d", type=int)
    src.add_argument("--p", type=float)
    src.add_argument("--seed", type=int, default=0)
    src.add_argument("--oriented", action="store_true", help="randomly orient the generated graph")


def _load_input(args) -> Graph | Orientation:
    if (args.graph is None) == (args.family is None):
        raise CliError(EXIT_INVALID, "usage", "give exactly one of --graph or --family")
    try:
        if args.graph is not None:
            return formats.load(args.graph, args.format)
        if args.n is None:
            raise CliError(EXIT_INVALID, "usage", "--family needs --n")
        return generate(args.family, args.n, d=args.d, seed=args.seed, p=args.p, oriented=args.oriented)
    except OSError as exc:
        raise CliError(EXIT_INVALID, "io", str(exc)) from None
    except GraphError as exc:
        raise CliError(EXIT_INVALID, "input", str(exc)) from None


def cmd_generate(args) -> int:
    if args.n is None:
        raise CliError(EXIT_INVALID, "usage", "--n is required")
    try:
        obj = generate(args.family, args.n, d=args.d, seed=args.seed, p=args.p, oriented=args.oriented)
    except GraphError as exc:
        raise CliError(EXIT_INVALID, "input", str(exc)) from None
    fmt = args.format
    if fmt is None:
        if args.out:
            fmt = formats.detect_format(args.out)
        else:
            fmt = "arcs" if isinstance(obj, Orientation) else "edges"
    try:
        text = formats.dumps(obj, fmt)
    except formats.FormatError as exc:
        raise CliError(EXIT_INVALID, "format", str(exc)) from None
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _config(args) -> SplitterConfig:
    kwargs = {"seed": args.seed, "heuristic_budget": args.budget}
    if args.exact_cap is not None:
        kwargs["exact_cap"] = args.exact_cap
        kwargs["coloring_cap"] = args.exact_cap
    return SplitterConfig(**kwargs)


def cmd_partition(args) -> int:
    g = _load_input(args)
    kind = args.kind
    if isinstance(g, Orientation):
        kind = "in_out_star_forest"
    try:
        cfg = _config(args)
        route = plan_route(g, args.k, args.strategy, cfg, kind)
        partition = extend_partition(g, route.oracle, args.k)
    except (NoRoute, HeuristicFailure, EquitabilityDrift) as exc:
        raise CliError(EXIT_NEGATIVE, type(exc).__name__, str(exc)) from None
    except CapExceeded as exc:
        raise CliError(EXIT_INVALID, "CapExceeded", str(exc)) from None
    cert = Certificate.issue(g, partition, f"equiforest partition {route.strategy} base={route.base}")
    verdict = cert.check(g)
    if not verdict:
        raise CliError(EXIT_INVALID, "InvalidCertificate", "; ".join(verdict.reasons))
    _emit(cert.to_dict(), args.out)
    print(f"{args.k} parts via {route.strategy}, sizes {partition.sizes}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = Certificate.from_json(Path(args.certificate).read_text())
    except (OSError, ValueError) as exc:
        raise CliError(EXIT_INVALID, "certificate", str(exc)) from None
    g = _load_input(args)
    verdict = cert.check(g)
    _emit(verdict.to_dict())
    for reason in verdict.reasons:
        print(reason, file=sys.stderr)
    return EXIT_OK if verdict else EXIT_INVALID


def cmd_search(args) -> int:
    g = _load_input(args)
    try:
        found = brute_force_equitable(g, args.k, args.kind, args.node_budget, args.cap)
    except BudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, "BudgetExceeded", str(exc)) from None
    except CapExceeded as exc:
        raise CliError(EXIT_INVALID, "CapExceeded", str(exc)) from None
    if found is None:
        _emit({"result": "UNSAT", "n": g.n, "k": args.k, "part_kind": args.kind})
        return EXIT_NEGATIVE
    _emit(Certificate.issue(g, found, "equiforest search").to_dict(), args.out)
    return EXIT_OK


SUITES = {
    "smoke": [("path", 12, None), ("cycle", 9, None), ("fan", 10, None), ("random_d_degenerate", 20, 2)],
    "degenerate": [("random_d_degenerate", n, d) for n in (60, 120, 240) for d in (2, 3)],
    "planar": [("stacked_triangulation", n, None) for n in (16, 60, 150)],
}

BENCH_FIELDS = ["instance", "n", "m", "d", "k", "strategy", "micros", "valid"]


def _bench_one(job) -> dict:
    family, n, d, seed, k, strategy = job
    g = generate(family, n, d=d, seed=seed)
    row = {
        "instance": f"{family}-n{n}" + (f"-d{d}" if d else "") + f"-s{seed}",
        "n": g.n,
        "m": g.m,
        "d": degeneracy(g)[0],
        "k": k,
        "strategy": strategy,
    }
    start = time.perf_counter()
    try:
        p = equitable_forests(g, k, strategy)
        valid = bool(Certificate.issue(g, p).check(g))
    except (NoRoute, HeuristicFailure, EquitabilityDrift, CapExceeded):
        valid = False
    row["micros"] = int((time.perf_counter() - start) * 1e6)
    row["valid"] = valid
    return row


def cmd_bench(args) -> int:
    if args.suite not in SUITES:
        raise CliError(EXIT_INVALID, "usage", f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    jobs = []
    for family, n, d in SUITES[args.suite]:
        for seed in range(args.seeds):
            for k in args.ks:
                for strategy in args.strategies:
                    jobs.append((family, n, d, seed, k, strategy))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(job) for job in jobs]
    handle = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(handle, fieldnames=BENCH_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            handle.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equiforest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oriented", action="store_true")
    p.add_argument("--format", choices=["graph6", "edges", "arcs"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("partition", help="equitable partition into k induced forests")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--kind", choices=["forest", "star_forest"], default="forest")
    p.add_argument("--budget", type=int, default=5000, help="heuristic repair steps")
    p.add_argument("--exact-cap", type=int, dest="exact_cap")
    p.add_argument("--out")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="re-check a certificate against a graph")
    p.add_argument("--certificate", required=True)
    _add_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive equitable-partition search")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--kind",
        choices=["forest", "star_forest", "linear_forest", "stable_set", "in_out_star_forest"],
        default="forest",
    )
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET, dest="node_budget")
    p.add_argument("--cap", type=int, default=None, help=f"max n (default {BRUTE_FORCE_CAP})")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bench", help="time the constructive pipeline, CSV to stdout")
    p.add_argument("--suite", required=True)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--ks", type=int, nargs="+", default=[9])
    p.add_argument("--strategies", nargs="+", choices=STRATEGIES, default=["auto"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        exact_cap(0)  # reject a malformed EQUIFOREST_EXACT_CAP up front
        return args.func(args)
    except CliError as exc:
        _emit({"error": exc.kind, "message": str(exc)})
        print(f"equiforest {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except (InvalidColoring, InvalidPartition, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        print(f"equiforest {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
