"""Solvers: the ant-based heuristic, the multi-start baseline, and an exact
brute-force oracle for small graphs.

One ANTH-LS generation builds ``ants`` cycles with the pheromone-biased
construction, improves each with LS-III or LS-IV (coin flip per ant), then
penalises the edges of the generation's best cycle and reinforces all
others. A run stops at the generation cap or on convergence, which is
signalled either by ``g_conv`` consecutive generations whose improved
cycles all share one common length, or by ``g_stall`` consecutive
generations without improving the incumbent; the second rule is what fires
on real instances, where per-ant lengths keep fluctuating by design (the
inverse update steers construction away from the best cycle found).

Randomness: a run's seed deterministically derives one substream per
(generation, ant), so results are reproducible regardless of how the
per-ant work would be scheduled.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Cycle, Graph, validate_cycle
from .local_search import LS_III, LS_IV

TERMINATED_CONVERGENCE = "convergence"
TERMINATED_CAP = "generation-cap"


@dataclass(frozen=True)
class SolverConfig:
    """All ANTH-LS tunables (defaults follow the published configuration)."""

    tau0: float = 10.0
    rho: float = 0.95
    tau_min: float = 0.01
    ants: int = 5
    g_conv: int = 50
    max_generations: int = 10000
    i_stag: int = 100
    ls3_probability: float = 0.5
    seed: int = 0
    g_stall: int = 4000
    single_successor: bool = False

    def __post_init__(self):
        if not 0.0 < self.rho <= 1.0:
            raise ValueError("rho must be in (0, 1]")
        if self.tau_min <= 0.0 or self.tau0 < self.tau_min:
            raise ValueError("need tau0 >= tau_min > 0")
        for name in ("ants", "g_conv", "max_generations", "i_stag", "g_stall"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not 0.0 <= self.ls3_probability <= 1.0:
            raise ValueError("ls3_probability must be in [0, 1]")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits, unsigned")


@dataclass(frozen=True)
class RunReport:
    """Outcome of one solver run (cycle in the ids of the solved graph).

    ``found_at`` is the generation (or restart) of the last improvement,
    the quantity benchmark tables usually report as "generations";
    ``generations_used`` counts everything executed before stopping.
    """

    best_cycle: Cycle
    best_length: int
    generations_used: int
    found_at: int
    wall_time: float
    terminated_by: str
    generation_trace: tuple[tuple[int, int], ...] | None = None


def anth_ls(g: Graph, cfg: SolverConfig | None = None,
            collect_trace: bool = False) -> RunReport:
    """Run the ant-based heuristic on ``g`` (ideally leaf-pruned first).

    Returns the best cycle seen across all generations and ants. An
    acyclic input terminates after one generation with an empty cycle
    (degenerate convergence).
    """
    if cfg is None:
        cfg = SolverConfig()
    t0 = time.perf_counter()
    indptr, adj, arc_eid = g.csr()
    tau = np.full(g.edge_count, float(cfg.tau0), dtype=np.float64)
    nbuf = max(g.n, 1)
    best_out = np.empty(nbuf, np.int32)
    trace_out = np.empty((nbuf + 1, 2), np.int64)
    best_len, generations, found_at, n_trace, terminated = \
        _kernels.anth_run_kernel(indptr, adj, arc_eid, tau,
                                 np.uint64(cfg.seed), cfg.ants, cfg.rho,
                                 cfg.tau_min, cfg.ls3_probability,
                                 cfg.g_conv, cfg.g_stall,
                                 cfg.max_generations, cfg.i_stag,
                                 cfg.single_successor, best_out, trace_out)
    best = tuple(int(x) for x in best_out[:best_len])
    trace = tuple((int(a), int(b)) for a, b in trace_out[:n_trace])
    return RunReport(best_cycle=best, best_length=best_len,
                     generations_used=generations, found_at=found_at,
                     wall_time=time.perf_counter() - t0,
                     terminated_by=(TERMINATED_CONVERGENCE if terminated
                                    else TERMINATED_CAP),
                     generation_trace=trace if collect_trace else None)


def msls(g: Graph, restarts: int = 10000, variant: str = LS_III,
         i_stag: int = 100, seed: int = 0,
         collect_trace: bool = False) -> RunReport:
    """Multi-start local search: independent unbiased randomized DFS
    constructions, each improved by the fixed local-search variant."""
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if variant not in (LS_III, LS_IV):
        raise ValueError(f"unknown local-search variant {variant!r}")
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must fit in 64 bits, unsigned")
    t0 = time.perf_counter()
    indptr, adj, arc_eid = g.csr()
    nbuf = max(g.n, 1)
    best_out = np.empty(nbuf, np.int32)
    trace_out = np.empty((nbuf + 1, 2), np.int64)
    best_len, found_at, n_trace = _kernels.msls_run_kernel(
        indptr, adj, arc_eid, np.uint64(seed), restarts,
        variant == LS_IV, i_stag, best_out, trace_out)
    best = tuple(int(x) for x in best_out[:best_len])
    trace = tuple((int(a), int(b)) for a, b in trace_out[:n_trace])
    return RunReport(best_cycle=best, best_length=best_len,
                     generations_used=restarts, found_at=found_at,
                     wall_time=time.perf_counter() - t0,
                     terminated_by=TERMINATED_CAP,
                     generation_trace=trace if collect_trace else None)


def exact_longest_cycle(g: Graph, vertex_budget: int = 16) -> Cycle:
    """Provably longest simple cycle by exhaustive backtracking.

    Enumerates simple paths from each root restricted to higher-numbered
    vertices (the root is the minimum id of its cycle, killing rotation
    symmetry). Refuses graphs above ``vertex_budget`` vertices to prevent
    accidental exponential blowups.
    """
    if g.n > vertex_budget:
        raise ValueError(f"graph has {g.n} vertices, above the exact-search "
                         f"budget of {vertex_budget}")
    adjacency = g.adjacency
    best: Cycle = ()
    path: list[int] = []

    def extend(root: int, v: int, visited: int):
        nonlocal best
        for w in adjacency[v]:
            if w == root:
                if len(path) >= 3 and len(path) > len(best):
                    best = tuple(path)
            elif w > root and not visited >> w & 1:
                path.append(w)
                extend(root, w, visited | 1 << w)
                path.pop()

    for root in range(g.n):
        if len(best) == g.n:
            break
        path = [root]
        extend(root, root, 1 << root)
    if best:
        err = validate_cycle(g, best)
        assert err is None, err
    return best
