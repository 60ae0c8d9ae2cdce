"""Per-edge pheromone state: proportional sampling and the inverse update.

The model keeps one positive weight per undirected edge. Construction
samples successors with probability proportional to the weight on the
connecting edge. After each generation the edges of the best cycle are
*penalised* (multiplied by the evaporation rate) and every other edge is
reinforced -- the inverse of classic ant systems, which is what biases
later constructions toward unexplored regions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Cycle, Graph


@dataclass
class PheromoneState:
    """Pheromone weights indexed by dense edge id of ``graph``."""

    graph: Graph
    tau: np.ndarray
    tau0: float
    tau_min: float


def init_pheromones(g: Graph, tau0: float = 10.0,
                    tau_min: float = 0.01) -> PheromoneState:
    """Deposit ``tau0`` on every edge. Requires tau0 >= tau_min > 0."""
    if tau_min <= 0.0 or tau0 <= 0.0:
        raise ValueError("tau0 and tau_min must be positive")
    if tau0 < tau_min:
        raise ValueError(f"tau0 ({tau0}) must be >= tau_min ({tau_min})")
    tau = np.full(g.edge_count, float(tau0), dtype=np.float64)
    return PheromoneState(graph=g, tau=tau, tau0=float(tau0),
                          tau_min=float(tau_min))


def sample_neighbor(ps: PheromoneState, g: Graph, v: int, candidates,
                    rng: np.random.Generator) -> int:
    """Draw one of ``candidates`` with probability proportional to the
    pheromone on the edge from ``v``. One uniform draw per call."""
    cands = list(candidates)
    if not cands:
        raise ValueError("sample_neighbor needs a non-empty candidate set")
    weights = [ps.tau[g.edge_id(v, w)] for w in cands]
    r = rng.random() * sum(weights)
    acc = 0.0
    for w, wt in zip(cands, weights):
        acc += wt
        if r < acc:
            return w
    return cands[-1]


def sample_visit_order(ps: PheromoneState, g: Graph, v: int, candidates,
                       rng: np.random.Generator) -> tuple[int, ...]:
    """Order ``candidates`` by repeated proportional sampling without
    replacement; the first element is the most-preferred successor."""
    remaining = list(candidates)
    order: list[int] = []
    while len(remaining) > 1:
        pick = sample_neighbor(ps, g, v, remaining, rng)
        remaining.remove(pick)
        order.append(pick)
    order.extend(remaining)
    return tuple(order)


def update_pheromones(ps: PheromoneState, best: Cycle, f_best: int,
                      f_star: int, rho: float) -> None:
    """Penalise the edges of ``best`` and reinforce all others, in place.

    Edges on the best cycle (including its closing edge) evaporate to
    ``rho * tau`` but never below ``tau_min``; every other edge gains
    1 / (10 - f_best + f_star). With ``f_star >= f_best`` the denominator
    is at least 10, so increments stay in (0, 0.1]. An empty ``best``
    (no cycle found this generation) reinforces every edge with f_best = 0.
    """
    if not 0.0 < rho <= 1.0:
        raise ValueError("rho must be in (0, 1]")
    if f_best != len(best):
        raise ValueError(f"f_best ({f_best}) != cycle length ({len(best)})")
    if f_star < f_best:
        raise ValueError(f"f_star ({f_star}) < f_best ({f_best})")
    g = ps.graph
    on_best = np.zeros(g.edge_count, dtype=bool)
    k = len(best)
    for i in range(k):
        on_best[g.edge_id(best[i], best[(i + 1) % k])] = True
    inc = 1.0 / (10.0 - f_best + f_star)
    ps.tau[on_best] = np.maximum(ps.tau_min, rho * ps.tau[on_best])
    ps.tau[~on_best] += inc
