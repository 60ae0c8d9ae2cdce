"""Benchmark command line.

One invocation runs one experiment (instance x algorithm x seeds), prints
a summary row, and optionally writes the structured JSON report and a DOT
drawing of the best cycle. ``--summarize`` instead merges previously
written reports into one table. Exit codes: 0 success, 1 usage or
configuration error, 2 I/O or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import (ALGORITHMS, FORMATS, ExperimentSpec, export_cycle_dot,
                    run_experiment, summarize, write_report)
from .graph import ParseError
from .solvers import SolverConfig


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we map usage -> 1
        raise UsageError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="longcycle",
                description="Long simple cycle search benchmarks")
    p.add_argument("--input", metavar="PATH", help="instance file to solve")
    p.add_argument("--format", choices=FORMATS,
                   help="input format (default: sniffed from the suffix)")
    p.add_argument("--algo", choices=ALGORITHMS, default="anth-ls",
                   help="solver to run (default: anth-ls)")
    p.add_argument("--runs", type=int, default=10, metavar="N",
                   help="independent runs with seeds seed, seed+1, ...")
    p.add_argument("--seed", type=int, default=1, metavar="N",
                   help="base seed (default: 1)")
    p.add_argument("--ants", type=int, default=None, metavar="N",
                   help="cycles constructed per generation")
    p.add_argument("--rho", type=float, default=None, metavar="X",
                   help="pheromone evaporation rate")
    p.add_argument("--tau0", type=float, default=None, metavar="X",
                   help="initial pheromone per edge")
    p.add_argument("--tau-min", type=float, default=None, metavar="X",
                   help="pheromone floor")
    p.add_argument("--conv", type=int, default=None, metavar="N",
                   help="equal-length generations implying convergence")
    p.add_argument("--max-gens", type=int, default=None, metavar="N",
                   help="generation cap")
    p.add_argument("--stag", type=int, default=None, metavar="N",
                   help="local-search stagnation budget")
    p.add_argument("--stall", type=int, default=None, metavar="N",
                   help="generations without improvement implying "
                        "convergence")
    p.add_argument("--restarts", type=int, default=10000, metavar="N",
                   help="restarts for the msls algorithms")
    p.add_argument("--no-prune", action="store_true",
                   help="skip iterative leaf pruning")
    p.add_argument("--budget", type=int, default=16, metavar="N",
                   help="vertex budget for the exact solver")
    p.add_argument("--report", metavar="PATH",
                   help="write the structured JSON report here")
    p.add_argument("--dot", metavar="PATH",
                   help="write a DOT drawing of the best cycle here")
    p.add_argument("--trace", action="store_true",
                   help="include per-run improvement traces in the report")
    p.add_argument("--summarize", nargs="+", metavar="REPORT",
                   help="merge existing report JSONs into one table")
    return p


def _solver_config(args) -> SolverConfig:
    overrides = {}
    for flag, field in (("ants", "ants"), ("rho", "rho"), ("tau0", "tau0"),
                        ("tau_min", "tau_min"), ("conv", "g_conv"),
                        ("max_gens", "max_generations"), ("stag", "i_stag"),
                        ("stall", "g_stall")):
        value = getattr(args, flag)
        if value is not None:
            overrides[field] = value
    return SolverConfig(**overrides)


def _summarize_reports(paths, out_stream) -> None:
    rows = []
    for path in paths:
        record = json.loads(Path(path).read_text())
        agg = record["aggregate"]
        rows.append({
            "instance": record["instance"],
            "algorithm": record["algorithm"],
            "cycle_length": agg["best_length"],
            "successes": agg["successes"],
            "runs": agg["runs"],
            "mean_found_at": agg["mean_found_at"],
            "mean_generations": agg["mean_generations"],
            "mean_wall_time_s": agg["mean_wall_time_s"],
        })
    rows.sort(key=lambda r: (r["instance"], r["algorithm"]))
    header = ("instance      algorithm   cycle   success   avg found   "
              "avg gens   avg time")
    out_stream.write(header + "\n" + "-" * len(header) + "\n")
    for r in rows:
        out_stream.write(
            f"{r['instance']:<12}  {r['algorithm']:<10}  "
            f"{r['cycle_length']:<6}  {r['successes']}/{r['runs']:<6}  "
            f"{r['mean_found_at']:<10.1f}  {r['mean_generations']:<9.1f}  "
            f"{r['mean_wall_time_s']:.3f}s\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(f"longcycle: error: {err}", file=sys.stderr)
        return 1

    try:
        if args.summarize:
            _summarize_reports(args.summarize, sys.stdout)
            return 0
        if not args.input:
            raise UsageError("--input is required (or use --summarize)")
        spec = ExperimentSpec(
            instance=args.input,
            format=args.format,
            algorithm=args.algo,
            runs=args.runs,
            seed=args.seed,
            prune=not args.no_prune,
            trace=args.trace,
            restarts=args.restarts,
            vertex_budget=args.budget,
            config=_solver_config(args),
        )
    except (UsageError, ValueError) as err:
        print(f"longcycle: error: {err}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as err:
        print(f"longcycle: error: bad report file: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"longcycle: error: {err}", file=sys.stderr)
        return 2

    try:
        agg = run_experiment(spec)
    except (ParseError, OSError) as err:
        print(f"longcycle: error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"longcycle: error: {err}", file=sys.stderr)
        return 1

    print(summarize([agg]))
    if args.report:
        write_report(agg, args.report)
    if args.dot:
        best_run = max(agg.runs, key=lambda r: r.best_length)
        export_cycle_dot(agg.graph, best_run.best_cycle, args.dot)
    return 0


if __name__ == "__main__":
    sys.exit(main())
