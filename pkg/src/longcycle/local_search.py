"""Cycle perturbation operators and the plateau-aware local search.

Two improvement operators enlarge a cycle by replacing one of its edges
with a diversion path through vertices outside the cycle (one new vertex:
``tri_grow``; two: ``quad_grow``). Two plateau operators keep the length
fixed, substituting the interior of a 2- or 3-edge sub-path with fresh
outside vertices (``tri_swap``, ``quad_swap``). LS-III searches with the
first three, LS-IV with all four. Improvement operators take precedence;
plateau moves are drawn uniformly from all applicable substitutions and
the search stops when nothing applies or after ``i_stag`` consecutive
moves without an enlargement.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Cycle, Graph

LS_III = "LS-III"
LS_IV = "LS-IV"


@dataclass(frozen=True)
class LsBudget:
    """Stopping policy: plateau budget and operator set."""

    i_stag: int = 100
    variant: str = LS_III

    def __post_init__(self):
        if self.i_stag < 1:
            raise ValueError("i_stag must be >= 1")
        if self.variant not in (LS_III, LS_IV):
            raise ValueError(f"unknown local-search variant {self.variant!r}")


def _cycle_buffers(g: Graph, cycle: Cycle) -> tuple[np.ndarray, np.ndarray]:
    cyc = np.empty(max(g.n, 1) + 2, np.int32)
    pos = np.full(max(g.n, 1), -1, np.int32)
    for i, v in enumerate(cycle):
        cyc[i] = v
        pos[v] = i
    return cyc, pos


def _pick(g: Graph, cycle: Cycle, scan, rng: np.random.Generator | None):
    if rng is None:
        rng = np.random.default_rng()
    indptr, adj, _ = g.csr()
    cyc, pos = _cycle_buffers(g, cycle)
    k = len(cycle)
    total = scan(indptr, adj, cyc, k, pos, -1)[0]
    if total == 0:
        return None
    j = int(rng.integers(total))
    return scan(indptr, adj, cyc, k, pos, j)[1:]


def tri_grow(g: Graph, cycle: Cycle,
             rng: np.random.Generator | None = None) -> Cycle | None:
    """Insert one outside vertex across a cycle edge (length + 1), chosen
    uniformly over all applicable (edge, vertex) pairs; None if none."""
    got = _pick(g, cycle, _kernels.tri_grow_scan, rng)
    if got is None:
        return None
    i, w = got
    return cycle[:i + 1] + (int(w),) + cycle[i + 1:]


def quad_grow(g: Graph, cycle: Cycle,
              rng: np.random.Generator | None = None) -> Cycle | None:
    """Insert two adjacent outside vertices across a cycle edge
    (length + 2); None if no application exists."""
    got = _pick(g, cycle, _kernels.quad_grow_scan, rng)
    if got is None:
        return None
    i, w, x = got
    return cycle[:i + 1] + (int(w), int(x)) + cycle[i + 1:]


def tri_swap(g: Graph, cycle: Cycle,
             rng: np.random.Generator | None = None) -> Cycle | None:
    """Replace the middle vertex of some 2-edge sub-path with an outside
    vertex (same length); None if no application exists."""
    got = _pick(g, cycle, _kernels.tri_swap_scan, rng)
    if got is None:
        return None
    i, w2 = got
    out = list(cycle)
    out[i] = int(w2)
    return tuple(out)


def quad_swap(g: Graph, cycle: Cycle,
              rng: np.random.Generator | None = None) -> Cycle | None:
    """Replace the two middle vertices of some 3-edge sub-path with two
    adjacent outside vertices (same length); None if no application exists
    or the cycle is shorter than 4."""
    if len(cycle) < 4:
        return None
    got = _pick(g, cycle, _kernels.quad_swap_scan, rng)
    if got is None:
        return None
    i, w2, x2 = got
    k = len(cycle)
    out = list(cycle)
    out[(i + 1) % k] = int(w2)
    out[(i + 2) % k] = int(x2)
    return tuple(out)


def _moves(g: Graph, cycle: Cycle, scan, arity: int) -> list[tuple]:
    indptr, adj, _ = g.csr()
    cyc, pos = _cycle_buffers(g, cycle)
    k = len(cycle)
    total = scan(indptr, adj, cyc, k, pos, -1)[0]
    return [scan(indptr, adj, cyc, k, pos, j)[1:1 + arity]
            for j in range(total)]


def tri_grow_moves(g: Graph, cycle: Cycle) -> list[Cycle]:
    """All cycles reachable by one tri_grow application (scan order)."""
    return [cycle[:i + 1] + (int(w),) + cycle[i + 1:]
            for i, w in _moves(g, cycle, _kernels.tri_grow_scan, 2)]


def quad_grow_moves(g: Graph, cycle: Cycle) -> list[Cycle]:
    """All cycles reachable by one quad_grow application (scan order)."""
    return [cycle[:i + 1] + (int(w), int(x)) + cycle[i + 1:]
            for i, w, x in _moves(g, cycle, _kernels.quad_grow_scan, 3)]


def tri_swap_moves(g: Graph, cycle: Cycle) -> list[Cycle]:
    """All cycles reachable by one tri_swap application (scan order)."""
    out = []
    for i, w2 in _moves(g, cycle, _kernels.tri_swap_scan, 2):
        lst = list(cycle)
        lst[i] = int(w2)
        out.append(tuple(lst))
    return out


def quad_swap_moves(g: Graph, cycle: Cycle) -> list[Cycle]:
    """All cycles reachable by one quad_swap application (scan order)."""
    if len(cycle) < 4:
        return []
    k = len(cycle)
    out = []
    for i, w2, x2 in _moves(g, cycle, _kernels.quad_swap_scan, 3):
        lst = list(cycle)
        lst[(i + 1) % k] = int(w2)
        lst[(i + 2) % k] = int(x2)
        out.append(tuple(lst))
    return out


def local_search(g: Graph, cycle: Cycle, budget: LsBudget | None = None,
                 rng: np.random.Generator | None = None) -> Cycle:
    """Improve ``cycle`` until stagnation; output is never shorter than the
    input and an empty input stays empty."""
    if budget is None:
        budget = LsBudget()
    if len(cycle) == 0:
        return ()
    if rng is None:
        rng = np.random.default_rng()
    indptr, adj, _ = g.csr()
    cyc, pos = _cycle_buffers(g, cycle)
    state = _kernels.stream_state(rng)
    k = _kernels.local_search_kernel(indptr, adj, cyc, len(cycle), pos,
                                     budget.variant == LS_IV, budget.i_stag,
                                     state)
    return tuple(int(x) for x in cyc[:k])
