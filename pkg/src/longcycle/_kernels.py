"""Numba kernels for the hot search loops.

Everything here operates on the CSR arrays of a Graph plus flat work
buffers, so the solver loops run at native speed. Randomness comes from an
explicit xoshiro256** state (uint64[4]) owned by the caller, which keeps
runs bit-reproducible for a fixed seed regardless of numpy/numba versions.

Layout conventions:
  indptr  int64[n+1], adj int32[2m], arc_eid int32[2m]  -- CSR adjacency
  tau     float64[m]                                    -- pheromone per edge id
  cyc     int32 buffer holding a cycle in positions [0, k)
  pos     int32[n], position of each vertex in cyc, -1 if outside
"""
from __future__ import annotations

import numpy as np
from numba import njit

U64 = np.uint64
_GOLD = U64(0x9E3779B97F4A7C15)
_MIX_A = U64(0xBF58476D1CE4E5B9)
_MIX_B = U64(0x94D049BB133111EB)
_C30, _C27, _C31 = U64(30), U64(27), U64(31)
_C64, _C17, _C45, _C7, _C11 = U64(64), U64(17), U64(45), U64(7), U64(11)
_F5, _F9 = U64(5), U64(9)
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


# -- random stream -----------------------------------------------------------

@njit(cache=True, nogil=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> _C30)) * _MIX_A
    z = (z ^ (z >> _C27)) * _MIX_B
    return z ^ (z >> _C31)


@njit(cache=True, nogil=True, inline="always")
def _rotl(x, k):
    return (x << k) | (x >> (_C64 - k))


@njit(cache=True, nogil=True, inline="always")
def _next64(s):
    r = _rotl(s[1] * _F5, _C7) * _F9
    t = s[1] << _C17
    s[2] ^= s[0]
    s[3] ^= s[1]
    s[1] ^= s[2]
    s[0] ^= s[3]
    s[2] ^= t
    s[3] = _rotl(s[3], _C45)
    return r


@njit(cache=True, nogil=True)
def rand01(s):
    """Uniform double in [0, 1), consuming one generator step."""
    return (_next64(s) >> _C11) * _INV53


@njit(cache=True, nogil=True)
def derive_state(seed, a, b, out):
    """Fill out[0:4] with a stream state derived from (seed, a, b).

    splitmix-style folding: distinct index pairs give independent streams,
    so per-generation / per-ant substreams never depend on scheduling.
    """
    z = _mix64(seed ^ _mix64(U64(a) * _GOLD + U64(1)))
    z = _mix64(z ^ _mix64(U64(b) * _GOLD + U64(2)))
    nonzero = False
    for i in range(4):
        z = z + _GOLD
        out[i] = _mix64(z)
        if out[i] != U64(0):
            nonzero = True
    if not nonzero:
        out[0] = _GOLD


# -- adjacency helpers -------------------------------------------------------

@njit(cache=True, nogil=True, inline="always")
def _find_arc(indptr, adj, u, w):
    """Binary-search the sorted neighbour slice of u for w; arc index or -1."""
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        x = adj[mid]
        if x == w:
            return mid
        if x < w:
            lo = mid + 1
        else:
            hi = mid
    return -1


# -- probabilistic DFS probe -------------------------------------------------

@njit(cache=True, nogil=True)
def _trace_cycle(indptr, adj, root, v, dc, parent, chain, trial, stamp, serial):
    """Trace the parent chain v -> root and emit the closed cycle.

    Writes [root, ..., v] into trial and re-verifies simplicity and
    adjacency before accepting; returns dc + 1 on success, 0 otherwise.
    Parent redirections make the checks cheap insurance rather than
    decoration.
    """
    want = dc + 1
    steps = 0
    cur = v
    while cur != root:
        if steps >= want or cur < 0:
            return 0
        chain[steps] = cur
        steps += 1
        cur = parent[cur]
    if steps != want - 1:
        return 0
    stamp[root] = serial
    for i in range(steps):
        x = chain[i]
        if stamp[x] == serial:
            return 0
        stamp[x] = serial
    trial[0] = root
    for i in range(steps):
        trial[i + 1] = chain[steps - 1 - i]
    for i in range(want):
        if _find_arc(indptr, adj, trial[i], trial[(i + 1) % want]) < 0:
            return 0
    return want


@njit(cache=True, nogil=True)
def probe_kernel(indptr, adj, arc_eid, tau, root, single_successor, state,
                 d, p, parent, stack, cand, wts, chain, trial, stamp,
                 serial_box, out_cyc):
    """One pheromone-biased DFS probe; returns the best closure length.

    Stack discipline: a vertex may sit on the stack several times after
    re-pushes; stale entries are skipped via the expanded flag, which is
    equivalent to removing them at re-push time (the fresh copy always
    lies above the stale ones). Each vertex expands at most once.

    In the default mode every eligible neighbour is pushed in sampled
    preference order (most preferred on top). With single_successor the
    literal one-neighbour reading is used: a single successor is sampled
    from the full neighbourhood and only that vertex is considered.
    """
    n = d.shape[0]
    for i in range(n):
        d[i] = 0
        p[i] = 0
        parent[i] = -1
    stack[0] = root
    top = 1
    best = 0
    best_v = -1
    while top > 0:
        top -= 1
        v = stack[top]
        if p[v] == 1:
            continue
        p[v] = 1
        dc = d[v]
        lo = indptr[v]
        hi = indptr[v + 1]
        if single_successor:
            if hi == lo:
                continue
            tot = 0.0
            for a in range(lo, hi):
                tot += tau[arc_eid[a]]
            r = rand01(state) * tot
            acc = 0.0
            pick = hi - 1
            for a in range(lo, hi):
                acc += tau[arc_eid[a]]
                if r < acc:
                    pick = a
                    break
            w = adj[pick]
            if w == root:
                if dc >= 2 and dc + 1 > best:
                    # the chain v -> root is frozen (only unexpanded
                    # vertices are re-parented), so tracing can wait
                    best = dc + 1
                    best_v = v
            elif p[w] == 0 and d[w] <= dc + 1:
                d[w] = dc + 1
                parent[w] = v
                stack[top] = w
                top += 1
            continue
        k = 0
        for a in range(lo, hi):
            w = adj[a]
            if w == root:
                if dc >= 2 and dc + 1 > best:
                    best = dc + 1
                    best_v = v
            elif p[w] == 0 and d[w] <= dc + 1:
                cand[k] = w
                wts[k] = tau[arc_eid[a]]
                k += 1
        if k == 1:
            w = cand[0]
            d[w] = dc + 1
            parent[w] = v
            stack[top] = w
            top += 1
        elif k > 1:
            # order candidates by sequential roulette without replacement;
            # equal weights reduce to a uniform permutation (Fisher-Yates),
            # which is the common case because non-penalised edges share
            # one bit-identical accumulated value
            equal = True
            w0 = wts[0]
            tot = w0
            for i in range(1, k):
                if wts[i] != w0:
                    equal = False
                tot += wts[i]
            if equal:
                for slot in range(k - 1):
                    j = slot + int(rand01(state) * (k - slot))
                    if j >= k:
                        j = k - 1
                    cw = cand[j]
                    cand[j] = cand[slot]
                    cand[slot] = cw
            else:
                for slot in range(k - 1):
                    r = rand01(state) * tot
                    acc = 0.0
                    pick = k - 1
                    for i in range(slot, k):
                        acc += wts[i]
                        if r < acc:
                            pick = i
                            break
                    tot -= wts[pick]
                    if tot < 0.0:
                        tot = 0.0
                    cw = cand[pick]
                    cwt = wts[pick]
                    cand[pick] = cand[slot]
                    wts[pick] = wts[slot]
                    cand[slot] = cw
                    wts[slot] = cwt
            # push least preferred first; most preferred pops first
            for i in range(k - 1, -1, -1):
                w = cand[i]
                d[w] = dc + 1
                parent[w] = v
                stack[top] = w
                top += 1
    if best_v < 0:
        return 0
    serial_box[0] += 1
    got = _trace_cycle(indptr, adj, root, best_v, best - 1, parent, chain,
                       trial, stamp, serial_box[0])
    if got == 0:
        return 0
    for i in range(got):
        out_cyc[i] = trial[i]
    return got


@njit(cache=True, nogil=True)
def construct_kernel(indptr, adj, arc_eid, tau, state, single_successor,
                     out_best):
    """Run one probe per root (ascending ids) and keep the longest cycle."""
    n = indptr.shape[0] - 1
    m2 = adj.shape[0]
    maxdeg = 1
    for v in range(n):
        dg = indptr[v + 1] - indptr[v]
        if dg > maxdeg:
            maxdeg = dg
    d = np.zeros(n, np.int32)
    p = np.zeros(n, np.int32)
    parent = np.full(n, -1, np.int32)
    stack = np.empty(m2 + n + 1, np.int32)
    cand = np.empty(maxdeg, np.int32)
    wts = np.empty(maxdeg, np.float64)
    nbuf = max(n, 1)
    chain = np.empty(nbuf, np.int32)
    trial = np.empty(nbuf, np.int32)
    probe_cyc = np.empty(nbuf, np.int32)
    stamp = np.zeros(nbuf, np.int64)
    serial_box = np.zeros(1, np.int64)
    best = 0
    for root in range(n):
        got = probe_kernel(indptr, adj, arc_eid, tau, root, single_successor,
                           state, d, p, parent, stack, cand, wts, chain,
                           trial, stamp, serial_box, probe_cyc)
        if got > best:
            best = got
            for i in range(got):
                out_best[i] = probe_cyc[i]
    return best


@njit(cache=True, nogil=True)
def probe_once_kernel(indptr, adj, arc_eid, tau, root, single_successor,
                      state, out_cyc):
    """Single probe with self-allocated work buffers (API convenience)."""
    n = indptr.shape[0] - 1
    m2 = adj.shape[0]
    maxdeg = 1
    for v in range(n):
        dg = indptr[v + 1] - indptr[v]
        if dg > maxdeg:
            maxdeg = dg
    d = np.zeros(n, np.int32)
    p = np.zeros(n, np.int32)
    parent = np.full(n, -1, np.int32)
    stack = np.empty(m2 + n + 1, np.int32)
    cand = np.empty(maxdeg, np.int32)
    wts = np.empty(maxdeg, np.float64)
    nbuf = max(n, 1)
    chain = np.empty(nbuf, np.int32)
    trial = np.empty(nbuf, np.int32)
    stamp = np.zeros(nbuf, np.int64)
    serial_box = np.zeros(1, np.int64)
    return probe_kernel(indptr, adj, arc_eid, tau, root, single_successor,
                        state, d, p, parent, stack, cand, wts, chain, trial,
                        stamp, serial_box, out_cyc)


def stream_state(rng) -> np.ndarray:
    """Derive a kernel RNG state (uint64[4]) from a numpy Generator."""
    raw = np.frombuffer(rng.bytes(32), dtype=np.uint64).copy()
    if not raw.any():
        raw[0] = _GOLD
    return raw


# -- full solver runs ----------------------------------------------------------

@njit(cache=True, nogil=True)
def _fill_positions(cyc, k, pos):
    pos[:] = -1
    for i in range(k):
        pos[cyc[i]] = i


@njit(cache=True, nogil=True)
def _mark_cycle_edges(indptr, adj, arc_eid, cyc, k, on_best):
    for i in range(k):
        a = _find_arc(indptr, adj, cyc[i], cyc[(i + 1) % k])
        on_best[arc_eid[a]] = 1


@njit(cache=True, nogil=True)
def anth_run_kernel(indptr, adj, arc_eid, tau, seed, ants, rho, tau_min,
                    ls3_probability, g_conv, g_stall, max_generations,
                    i_stag, single_successor, best_out, trace_out):
    """One full ANTH-LS run; the per-generation loop lives here so Python
    overhead never multiplies across thousands of generations.

    tau arrives pre-filled with tau0. Writes the incumbent cycle into
    best_out and (generation, new f*) improvement pairs into trace_out.
    Returns (best_len, generations, found_at, trace_len, terminated) with
    terminated 0 = generation cap, 1 = equal-length window, 2 = incumbent
    stagnation window.
    """
    n = indptr.shape[0] - 1
    m = tau.shape[0]
    nbuf = max(n, 1)
    cycbuf = np.empty(nbuf + 2, np.int32)
    pos = np.empty(nbuf, np.int32)
    a_best = np.empty(nbuf, np.int32)
    on_best = np.zeros(max(m, 1), np.uint8)
    state = np.empty(4, np.uint64)

    best_len = 0
    f_star = 0
    found_at = 0
    n_trace = 0
    window_len = -1
    window_count = 0
    stall = 0
    terminated = 0
    generations = 0

    for gen in range(1, max_generations + 1):
        generations = gen
        a_best_len = 0
        all_equal = True
        first_len = -1
        for ant in range(ants):
            derive_state(seed, gen, ant, state)
            length = construct_kernel(indptr, adj, arc_eid, tau, state,
                                      single_successor, cycbuf)
            use_quad_swap = rand01(state) >= ls3_probability
            if length > 0:
                _fill_positions(cycbuf, length, pos)
                length = local_search_kernel(indptr, adj, cycbuf, length,
                                             pos, use_quad_swap, i_stag,
                                             state)
            if first_len < 0:
                first_len = length
            elif length != first_len:
                all_equal = False
            if length > a_best_len:
                a_best_len = length
                for i in range(length):
                    a_best[i] = cycbuf[i]

        improved = a_best_len > f_star
        if improved:
            f_star = a_best_len
            best_len = a_best_len
            found_at = gen
            for i in range(a_best_len):
                best_out[i] = a_best[i]
            trace_out[n_trace, 0] = gen
            trace_out[n_trace, 1] = f_star
            n_trace += 1

        # inverse reinforcement: penalise the generation best, boost the rest
        if m > 0:
            for e in range(m):
                on_best[e] = 0
            _mark_cycle_edges(indptr, adj, arc_eid, a_best, a_best_len,
                              on_best)
            inc = 1.0 / (10.0 - a_best_len + f_star)
            for e in range(m):
                if on_best[e] == 1:
                    t = rho * tau[e]
                    tau[e] = t if t > tau_min else tau_min
                else:
                    tau[e] += inc

        if all_equal:
            if window_count > 0 and first_len == window_len:
                window_count += 1
            else:
                window_len = first_len
                window_count = 1
        else:
            window_count = 0
        stall = 0 if improved else stall + 1

        if window_count >= g_conv:
            terminated = 1
            break
        if stall >= g_stall:
            terminated = 2
            break
        if gen == 1 and a_best_len == 0:
            # no probe closed a cycle anywhere: the graph is acyclic
            terminated = 1
            break

    return best_len, generations, found_at, n_trace, terminated


@njit(cache=True, nogil=True)
def msls_run_kernel(indptr, adj, arc_eid, seed, restarts, use_quad_swap,
                    i_stag, best_out, trace_out):
    """Multi-start local search run: unbiased constructions (uniform
    pheromones), fixed local-search variant. Returns
    (best_len, found_at, trace_len)."""
    n = indptr.shape[0] - 1
    m2 = adj.shape[0]
    nbuf = max(n, 1)
    uniform_tau = np.ones(max(m2 // 2, 1), np.float64)
    cycbuf = np.empty(nbuf + 2, np.int32)
    pos = np.empty(nbuf, np.int32)
    state = np.empty(4, np.uint64)
    best_len = 0
    found_at = 0
    n_trace = 0
    for r in range(1, restarts + 1):
        derive_state(seed, r, 0, state)
        length = construct_kernel(indptr, adj, arc_eid, uniform_tau, state,
                                  False, cycbuf)
        if length > 0:
            _fill_positions(cycbuf, length, pos)
            length = local_search_kernel(indptr, adj, cycbuf, length, pos,
                                         use_quad_swap, i_stag, state)
        if length > best_len:
            best_len = length
            found_at = r
            for i in range(length):
                best_out[i] = cycbuf[i]
            trace_out[n_trace, 0] = r
            trace_out[n_trace, 1] = length
            n_trace += 1
    return best_len, found_at, n_trace


# -- local-search operator scans ---------------------------------------------
# Each scan enumerates the operator's applicable moves in a fixed order.
# With j < 0 it returns the total count; with j >= 0 it returns the j-th
# move, so a uniform choice costs one counting pass plus one extraction
# pass and no allocation.

@njit(cache=True, nogil=True)
def tri_grow_scan(indptr, adj, cyc, k, pos, j):
    """Moves (i, w): replace cycle edge (cyc[i], cyc[i+1]) by a 2-path via w."""
    cnt = 0
    for i in range(k):
        u = cyc[i]
        v = cyc[(i + 1) % k]
        for a in range(indptr[u], indptr[u + 1]):
            w = adj[a]
            if pos[w] < 0 and _find_arc(indptr, adj, w, v) >= 0:
                if cnt == j:
                    return cnt, i, w
                cnt += 1
    return cnt, -1, -1


@njit(cache=True, nogil=True)
def quad_grow_scan(indptr, adj, cyc, k, pos, j):
    """Moves (i, w, x): replace cycle edge (cyc[i], cyc[i+1]) by a 3-path."""
    cnt = 0
    for i in range(k):
        u = cyc[i]
        v = cyc[(i + 1) % k]
        for a in range(indptr[u], indptr[u + 1]):
            w = adj[a]
            if pos[w] >= 0:
                continue
            for b in range(indptr[w], indptr[w + 1]):
                x = adj[b]
                if pos[x] < 0 and _find_arc(indptr, adj, x, v) >= 0:
                    if cnt == j:
                        return cnt, i, w, x
                    cnt += 1
    return cnt, -1, -1, -1


@njit(cache=True, nogil=True)
def tri_swap_scan(indptr, adj, cyc, k, pos, j):
    """Moves (i, w2): substitute the middle vertex cyc[i] of a 2-sub-path."""
    cnt = 0
    for i in range(k):
        u = cyc[(i - 1) % k]
        v = cyc[(i + 1) % k]
        for a in range(indptr[u], indptr[u + 1]):
            w2 = adj[a]
            if pos[w2] < 0 and _find_arc(indptr, adj, w2, v) >= 0:
                if cnt == j:
                    return cnt, i, w2
                cnt += 1
    return cnt, -1, -1


@njit(cache=True, nogil=True)
def quad_swap_scan(indptr, adj, cyc, k, pos, j):
    """Moves (i, w2, x2): substitute the two middle vertices of a 3-sub-path
    starting at cyc[i]."""
    cnt = 0
    if k < 4:
        return cnt, -1, -1, -1
    for i in range(k):
        u = cyc[i]
        v = cyc[(i + 3) % k]
        for a in range(indptr[u], indptr[u + 1]):
            w2 = adj[a]
            if pos[w2] >= 0:
                continue
            for b in range(indptr[w2], indptr[w2 + 1]):
                x2 = adj[b]
                if pos[x2] < 0 and _find_arc(indptr, adj, x2, v) >= 0:
                    if cnt == j:
                        return cnt, i, w2, x2
                    cnt += 1
    return cnt, -1, -1, -1


@njit(cache=True, nogil=True)
def _insert_after(cyc, pos, k, i, w):
    for t in range(k, i + 1, -1):
        cyc[t] = cyc[t - 1]
        pos[cyc[t]] = t
    cyc[i + 1] = w
    pos[w] = i + 1
    return k + 1


@njit(cache=True, nogil=True)
def _insert2_after(cyc, pos, k, i, w, x):
    for t in range(k + 1, i + 2, -1):
        cyc[t] = cyc[t - 2]
        pos[cyc[t]] = t
    cyc[i + 1] = w
    pos[w] = i + 1
    cyc[i + 2] = x
    pos[x] = i + 2
    return k + 2


@njit(cache=True, nogil=True)
def _replace_at(cyc, pos, i, w2):
    pos[cyc[i]] = -1
    cyc[i] = w2
    pos[w2] = i


@njit(cache=True, nogil=True)
def local_search_kernel(indptr, adj, cyc, k, pos, use_quad_swap, i_stag,
                        state):
    """Improvement-first local search; returns the final cycle length.

    Growth operators (edge -> 2-path, then edge -> 3-path) are applied
    whenever available. Otherwise one plateau substitution is drawn
    uniformly from the applicable 2-sub-path swaps (plus 3-sub-path swaps
    when use_quad_swap). Stops when nothing applies or after i_stag
    consecutive non-enlarging moves.
    """
    if k == 0:
        return 0
    stag = 0
    while True:
        cnt, gi, gw = tri_grow_scan(indptr, adj, cyc, k, pos, -1)
        if cnt > 0:
            j = int(rand01(state) * cnt)
            if j >= cnt:
                j = cnt - 1
            cnt, gi, gw = tri_grow_scan(indptr, adj, cyc, k, pos, j)
            k = _insert_after(cyc, pos, k, gi, gw)
            stag = 0
            continue
        cnt, gi, gw, gx = quad_grow_scan(indptr, adj, cyc, k, pos, -1)
        if cnt > 0:
            j = int(rand01(state) * cnt)
            if j >= cnt:
                j = cnt - 1
            cnt, gi, gw, gx = quad_grow_scan(indptr, adj, cyc, k, pos, j)
            k = _insert2_after(cyc, pos, k, gi, gw, gx)
            stag = 0
            continue
        s3, si, sw = tri_swap_scan(indptr, adj, cyc, k, pos, -1)
        s4 = 0
        qi = qw = qx = -1
        if use_quad_swap:
            s4, qi, qw, qx = quad_swap_scan(indptr, adj, cyc, k, pos, -1)
        total = s3 + s4
        if total == 0:
            break
        j = int(rand01(state) * total)
        if j >= total:
            j = total - 1
        if j < s3:
            s3, si, sw = tri_swap_scan(indptr, adj, cyc, k, pos, j)
            _replace_at(cyc, pos, si, sw)
        else:
            s4, qi, qw, qx = quad_swap_scan(indptr, adj, cyc, k, pos, j - s3)
            _replace_at(cyc, pos, (qi + 1) % k, qw)
            _replace_at(cyc, pos, (qi + 2) % k, qx)
        stag += 1
        if stag >= i_stag:
            break
    return k
