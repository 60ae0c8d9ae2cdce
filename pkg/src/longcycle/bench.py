"""Experiment harness: load an instance, run a solver across seeds,
aggregate the outcomes, and export reports, tables, and DOT drawings.

Runs within one experiment execute concurrently (independent seeds; the
solver kernels release the GIL), and results are assembled in seed order,
so reports are reproducible: the same spec yields identical structured
output except for wall-time fields.
"""
from __future__ import annotations

import dataclasses
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .graph import (Cycle, Graph, ParseError, parse_dimacs, parse_edge_list,
                    parse_gml, prune_leaves, validate_cycle)
from .local_search import LS_III, LS_IV
from .solvers import (RunReport, SolverConfig, anth_ls, exact_longest_cycle,
                      msls)

ALGORITHMS = ("anth-ls", "msls-iii", "msls-iv", "exact")
FORMATS = ("edgelist", "gml", "dimacs")

_PARSERS = {"edgelist": parse_edge_list, "gml": parse_gml,
            "dimacs": parse_dimacs}
_SUFFIX_FORMAT = {".gml": "gml", ".col": "dimacs", ".dimacs": "dimacs",
                  ".clq": "dimacs"}


def sniff_format(path: str | Path) -> str:
    """Guess the file format from the suffix; plain edge list by default."""
    return _SUFFIX_FORMAT.get(Path(path).suffix.lower(), "edgelist")


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Parse a graph file in the given (or sniffed) format."""
    fmt = fmt or sniff_format(path)
    if fmt not in _PARSERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    text = Path(path).read_text()
    return _PARSERS[fmt](text)


@dataclass(frozen=True)
class ExperimentSpec:
    """Everything needed to reproduce one benchmark experiment."""

    instance: str
    format: str | None = None
    algorithm: str = "anth-ls"
    runs: int = 10
    seed: int = 1
    prune: bool = True
    trace: bool = False
    restarts: int = 10000
    vertex_budget: int = 16
    config: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; "
                             f"expected one of {ALGORITHMS}")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class AggregateReport:
    """Per-run reports (cycles in original dense ids) plus summary stats."""

    spec: ExperimentSpec
    instance_name: str
    graph: Graph
    pruned_n: int
    runs: tuple[RunReport, ...]
    best_length: int
    success_rate: float
    mean_generations: float
    mean_found_at: float
    mean_wall_time: float


def _solve_one(spec: ExperimentSpec, g: Graph, seed: int) -> RunReport:
    if spec.algorithm == "anth-ls":
        cfg = dataclasses.replace(spec.config, seed=seed)
        return anth_ls(g, cfg, collect_trace=spec.trace)
    if spec.algorithm in ("msls-iii", "msls-iv"):
        variant = LS_III if spec.algorithm == "msls-iii" else LS_IV
        return msls(g, restarts=spec.restarts, variant=variant,
                    i_stag=spec.config.i_stag, seed=seed,
                    collect_trace=spec.trace)
    # exact oracle: deterministic, single pass
    import time
    t0 = time.perf_counter()
    cycle = exact_longest_cycle(g, vertex_budget=spec.vertex_budget)
    return RunReport(best_cycle=cycle, best_length=len(cycle),
                     generations_used=1, found_at=1 if cycle else 0,
                     wall_time=time.perf_counter() - t0,
                     terminated_by="convergence",
                     generation_trace=None)


def run_experiment(spec: ExperimentSpec,
                   max_workers: int | None = None) -> AggregateReport:
    """Execute the experiment: parse, prune, run all seeds, aggregate.

    Every best cycle is mapped back to the original (unpruned) graph's ids
    and re-validated against it before the report is assembled.
    """
    g = load_graph(spec.instance, spec.format)
    if spec.prune:
        pruned = prune_leaves(g)
        work, back = pruned.pruned, pruned.kept_to_original
    else:
        work, back = g, tuple(range(g.n))

    n_runs = 1 if spec.algorithm == "exact" else spec.runs
    seeds = [spec.seed + i for i in range(n_runs)]
    if max_workers is None:
        max_workers = min(n_runs, os.cpu_count() or 1)
    if max_workers > 1 and n_runs > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            raw = list(pool.map(lambda s: _solve_one(spec, work, s), seeds))
    else:
        raw = [_solve_one(spec, work, s) for s in seeds]

    runs = []
    for rep in raw:
        cycle = tuple(back[v] for v in rep.best_cycle)
        err = validate_cycle(g, cycle)
        if err is not None:
            raise AssertionError(f"solver emitted an invalid cycle: {err}")
        runs.append(dataclasses.replace(rep, best_cycle=cycle))

    best = max(r.best_length for r in runs)
    successes = sum(1 for r in runs if r.best_length == best)
    return AggregateReport(
        spec=spec,
        instance_name=Path(spec.instance).stem,
        graph=g,
        pruned_n=work.n,
        runs=tuple(runs),
        best_length=best,
        success_rate=successes / len(runs),
        mean_generations=sum(r.generations_used for r in runs) / len(runs),
        mean_found_at=sum(r.found_at for r in runs) / len(runs),
        mean_wall_time=sum(r.wall_time for r in runs) / len(runs),
    )


def report_record(agg: AggregateReport) -> dict:
    """JSON-ready record of one experiment (cycles in original labels)."""
    labels = agg.graph.labels
    cfg = dataclasses.asdict(agg.spec.config)
    cfg.pop("seed", None)  # per-run seeds are listed with each run
    record = {
        "instance": agg.instance_name,
        "path": str(agg.spec.instance),
        "format": agg.spec.format or sniff_format(agg.spec.instance),
        "algorithm": agg.spec.algorithm,
        "config": {
            **cfg,
            "runs": len(agg.runs),
            "base_seed": agg.spec.seed,
            "prune": agg.spec.prune,
            "restarts": agg.spec.restarts,
            "vertex_budget": agg.spec.vertex_budget,
        },
        "graph": {"vertices": agg.graph.n, "edges": agg.graph.edge_count,
                  "pruned_vertices": agg.pruned_n},
        "runs": [],
        "aggregate": {
            "best_length": agg.best_length,
            "successes": sum(1 for r in agg.runs
                             if r.best_length == agg.best_length),
            "runs": len(agg.runs),
            "success_rate": agg.success_rate,
            "mean_generations": agg.mean_generations,
            "mean_found_at": agg.mean_found_at,
            "mean_wall_time_s": round(agg.mean_wall_time, 3),
        },
    }
    for i, rep in enumerate(agg.runs):
        entry = {
            "seed": agg.spec.seed + i,
            "best_length": rep.best_length,
            "generations": rep.generations_used,
            "found_at": rep.found_at,
            "terminated_by": rep.terminated_by,
            "wall_time_s": round(rep.wall_time, 3),
            "best_cycle": [labels[v] for v in rep.best_cycle],
        }
        if rep.generation_trace is not None:
            entry["trace"] = [list(pair) for pair in rep.generation_trace]
        record["runs"].append(entry)
    return record


def write_report(agg: AggregateReport, path: str | Path) -> None:
    Path(path).write_text(json.dumps(report_record(agg), indent=2) + "\n")


_COLUMNS = ("instance", "algorithm", "cycle", "success", "avg found",
            "avg gens", "avg time")


def summary_rows(reports) -> list[dict]:
    """Machine-readable summary, one row per experiment (instance-sorted)."""
    rows = []
    for agg in sorted(reports, key=lambda a: (a.instance_name,
                                              a.spec.algorithm)):
        successes = sum(1 for r in agg.runs
                        if r.best_length == agg.best_length)
        rows.append({
            "instance": agg.instance_name,
            "algorithm": agg.spec.algorithm,
            "cycle_length": agg.best_length,
            "successes": successes,
            "runs": len(agg.runs),
            "success_rate": agg.success_rate,
            "mean_found_at": agg.mean_found_at,
            "mean_generations": agg.mean_generations,
            "mean_wall_time_s": round(agg.mean_wall_time, 3),
        })
    return rows


def summarize(reports, structured_path: str | Path | None = None) -> str:
    """Fixed-column text table over experiments; optionally also writes the
    rows as JSON to ``structured_path``."""
    rows = summary_rows(reports)
    if structured_path is not None:
        Path(structured_path).write_text(json.dumps(rows, indent=2) + "\n")
    widths = [12, 10, 6, 8, 10, 9, 9]
    header = "  ".join(c.ljust(w) for c, w in zip(_COLUMNS, widths)).rstrip()
    lines = [header, "-" * len(header)]
    for row in rows:
        cells = (
            row["instance"].ljust(widths[0]),
            row["algorithm"].ljust(widths[1]),
            str(row["cycle_length"]).ljust(widths[2]),
            f"{row['successes']}/{row['runs']}".ljust(widths[3]),
            f"{row['mean_found_at']:.1f}".ljust(widths[4]),
            f"{row['mean_generations']:.1f}".ljust(widths[5]),
            f"{row['mean_wall_time_s']:.3f}s".ljust(widths[6]),
        )
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def export_cycle_dot(g: Graph, cycle: Cycle, sink) -> None:
    """Write an undirected DOT drawing with the cycle's edges highlighted.

    Output is deterministic (nodes and edges in dense-id order). Refuses
    invalid cycles with the validation verdict.
    """
    err = validate_cycle(g, cycle)
    if err is not None:
        raise ValueError(f"refusing to export invalid cycle: {err}")
    on_cycle = set()
    k = len(cycle)
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        on_cycle.add((u, v) if u < v else (v, u))

    close = False
    if isinstance(sink, (str, Path)):
        sink = open(sink, "w")
        close = True
    try:
        sink.write("graph longcycle {\n")
        sink.write("  node [shape=circle];\n")
        for v in range(g.n):
            sink.write(f'  "{g.labels[v]}";\n')
        for u, v in g.edge_list:
            u, v = int(u), int(v)
            attr = (' [color="red", penwidth=2.0]'
                    if (u, v) in on_cycle else "")
            sink.write(f'  "{g.labels[u]}" -- "{g.labels[v]}"{attr};\n')
        sink.write("}\n")
    finally:
        if close:
            sink.close()
