"""Probabilistic DFS construction of long cycles.

One probe grows a pheromone-biased depth-first search from a fixed root
and records the longest simple cycle that closes back at the root; a full
construction runs one probe per vertex (ascending ids) and keeps the best.

By default every eligible neighbour of an expanded vertex is pushed, in
sampled preference order, which keeps the search complete: with all
pheromones equal the construction is exactly an unbiased randomized DFS
sampler, and a construction returns an empty cycle iff the graph is
acyclic. ``single_successor=True`` switches to the literal one-neighbour
reading (a pure biased walk) for comparison; that mode can miss cycles.
"""
from __future__ import annotations

import numpy as np

from . import _kernels
from .graph import Cycle, Graph
from .pheromone import PheromoneState


def _as_state(rng: np.random.Generator | None) -> np.ndarray:
    if rng is None:
        rng = np.random.default_rng()
    return _kernels.stream_state(rng)


def probe_from_root(g: Graph, ps: PheromoneState, root: int,
                    rng: np.random.Generator | None = None,
                    single_successor: bool = False) -> Cycle:
    """Best cycle through ``root`` found by one biased DFS probe (may be
    empty). Each vertex is expanded at most once per probe."""
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} outside vertex range [0, {g.n})")
    indptr, adj, arc_eid = g.csr()
    out = np.empty(max(g.n, 1), np.int32)
    length = _kernels.probe_once_kernel(indptr, adj, arc_eid, ps.tau, root,
                                        single_successor, _as_state(rng), out)
    return tuple(int(x) for x in out[:length])


def construct_cycle(g: Graph, ps: PheromoneState,
                    rng: np.random.Generator | None = None,
                    single_successor: bool = False) -> Cycle:
    """Longest cycle over probes from every vertex; empty iff ``g`` is
    acyclic (in the default full-expansion mode)."""
    indptr, adj, arc_eid = g.csr()
    out = np.empty(max(g.n, 1), np.int32)
    length = _kernels.construct_kernel(indptr, adj, arc_eid, ps.tau,
                                       _as_state(rng), single_successor, out)
    return tuple(int(x) for x in out[:length])
