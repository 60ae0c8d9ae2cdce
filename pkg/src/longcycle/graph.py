"""Simple undirected graph core: construction, file parsing, leaf pruning, cycle checks.

Vertices are dense 0-based integers. Original file labels are kept on the
graph as a sidecar (``labels``) so results can be reported in the ids the
input used. Cycles are plain tuples of distinct vertex ids, read as closed
by the implicit edge between the last and first vertex; the empty tuple
means "no cycle".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Cycle = tuple[int, ...]


class ParseError(ValueError):
    """Raised when an input graph file is malformed."""


@dataclass(frozen=True)
class ParseDiagnostics:
    """Counters for silently repaired input (kept simple on purpose)."""

    self_loops_dropped: int = 0
    duplicate_edges_dropped: int = 0


class Graph:
    """Immutable simple undirected graph.

    Adjacency is stored in CSR form with sorted neighbour arrays. Every
    undirected edge {u, v} carries a dense edge id in [0, edge_count),
    assigned in lexicographic order of the (min, max) endpoint pair, so
    edge ids are a deterministic bijection onto the edge set.
    """

    __slots__ = ("n", "edge_count", "labels", "diagnostics",
                 "_indptr", "_adj", "_arc_eid", "_edge_index", "_edge_list")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        loops = 0
        kept = 0
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range [0, {n})")
            if u == v:
                loops += 1
                continue
            kept += 1
            seen.add((u, v) if u < v else (v, u))
        dups = kept - len(seen)
        self.n = n
        pairs = sorted(seen)
        m = len(pairs)
        self.edge_count = m
        self._edge_index = {pair: eid for eid, pair in enumerate(pairs)}
        self._edge_list = np.array(pairs, dtype=np.int32).reshape(m, 2)

        deg = np.zeros(n, dtype=np.int64)
        for u, v in pairs:
            deg[u] += 1
            deg[v] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        adj = np.zeros(2 * m, dtype=np.int32)
        arc_eid = np.zeros(2 * m, dtype=np.int32)
        cursor = indptr[:-1].copy()
        for eid, (u, v) in enumerate(pairs):
            adj[cursor[u]] = v
            arc_eid[cursor[u]] = eid
            cursor[u] += 1
            adj[cursor[v]] = u
            arc_eid[cursor[v]] = eid
            cursor[v] += 1
        # neighbours of each vertex arrive sorted because pairs are sorted
        # lexicographically only in (u, v); sort each CSR slice to be sure.
        for v in range(n):
            lo, hi = indptr[v], indptr[v + 1]
            order = np.argsort(adj[lo:hi], kind="stable")
            adj[lo:hi] = adj[lo:hi][order]
            arc_eid[lo:hi] = arc_eid[lo:hi][order]
        for arr in (adj, arc_eid, indptr):
            arr.setflags(write=False)
        self._indptr = indptr
        self._adj = adj
        self._arc_eid = arc_eid
        self._edge_list.setflags(write=False)

        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
        self.labels = labels
        self.diagnostics = ParseDiagnostics(self_loops_dropped=loops,
                                            duplicate_edges_dropped=dups)

    # -- accessors ---------------------------------------------------------

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbour ids of ``v`` (read-only view)."""
        return self._adj[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        """Dense id of edge {u, v}; KeyError if the edge is absent."""
        key = (u, v) if u < v else (v, u)
        return self._edge_index[key]

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency as nested tuples (convenience for tests and demos)."""
        return tuple(tuple(int(w) for w in self.neighbors(v))
                     for v in range(self.n))

    @property
    def edge_list(self) -> np.ndarray:
        """(edge_count, 2) array of endpoint pairs, row i = edge id i."""
        return self._edge_list

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(indptr, adj, arc_eid) arrays backing the adjacency structure."""
        return self._indptr, self._adj, self._arc_eid

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


# -- parsing ---------------------------------------------------------------

def _lines(text) -> list[str]:
    if isinstance(text, str):
        return text.splitlines()
    if hasattr(text, "read"):
        return text.read().splitlines()
    return [str(line).rstrip("\n") for line in text]


def parse_edge_list(text) -> Graph:
    """Parse a plain whitespace-separated edge list.

    Lines starting with '#' or '%' and blank lines are skipped. Each data
    line must begin with two integer vertex ids; trailing columns (e.g.
    weights) are ignored. Ids are remapped to dense 0-based ids in first
    appearance order; the original ids are kept as labels. Duplicate edges
    and self-loops are dropped silently (counted in ``diagnostics``).
    """
    ids: dict[int, int] = {}
    labels: list[int] = []
    pairs: list[tuple[int, int]] = []

    def dense(orig: int) -> int:
        got = ids.get(orig)
        if got is None:
            got = len(labels)
            ids[orig] = got
            labels.append(orig)
        return got

    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        pairs.append((dense(u), dense(v)))
    return Graph(len(labels), pairs, labels=labels)


def parse_dimacs(text) -> Graph:
    """Parse DIMACS edge format: a ``p edge N M`` header then ``e u v`` lines.

    Vertex ids are 1-based in the file and shifted to 0-based; labels keep
    the 1-based ids. Comment lines start with 'c'.
    """
    n = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(parts) < 4 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed problem line {line!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge record before 'p edge' header")
            if len(parts) < 3:
                raise ParseError(f"line {lineno}: malformed edge record {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex id outside [1, {n}] in {line!r}")
            pairs.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown record type {parts[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge' header")
    return Graph(n, pairs, labels=list(range(1, n + 1)))


def _tokenize_gml(text: str) -> list[str]:
    tokens: list[str] = []
    i, size = 0, len(text)
    while i < size:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "[]":
            tokens.append(ch)
            i += 1
        elif ch == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string in GML input")
            tokens.append(text[i:j + 1])
            i = j + 1
        else:
            j = i
            while j < size and not text[j].isspace() and text[j] not in "[]":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def _parse_gml_block(tokens: list[str], pos: int) -> tuple[list[tuple[str, object]], int]:
    items: list[tuple[str, object]] = []
    while pos < len(tokens):
        tok = tokens[pos]
        if tok == "]":
            return items, pos + 1
        if tok == "[":
            raise ParseError("unexpected '[' in GML input")
        key = tok
        pos += 1
        if pos >= len(tokens):
            raise ParseError(f"GML key {key!r} has no value")
        val = tokens[pos]
        if val == "[":
            sub, pos = _parse_gml_block(tokens, pos + 1)
            items.append((key, sub))
        else:
            items.append((key, val))
            pos += 1
    return items, pos


def parse_gml(text) -> Graph:
    """Parse the GML subset used by public network datasets.

    Only ``node [ id N ]`` and ``edge [ source A target B ]`` records inside
    the ``graph [ ... ]`` block are interpreted; all other attributes are
    ignored, and ``directed`` flags are dropped (edges are always undirected
    here). Node ids become labels; dense ids follow declaration order.
    """
    if not isinstance(text, str):
        text = text.read() if hasattr(text, "read") else "\n".join(_lines(text))
    tokens = _tokenize_gml(text)
    top, _ = _parse_gml_block(tokens, 0)
    graph_block = None
    for key, val in top:
        if key == "graph" and isinstance(val, list):
            graph_block = val
            break
    if graph_block is None:
        raise ParseError("no 'graph [ ... ]' block found")

    def field(block: list, name: str) -> str | None:
        for k, v in block:
            if k == name and not isinstance(v, list):
                return v
        return None

    ids: dict[int, int] = {}
    labels: list[int] = []
    pairs: list[tuple[int, int]] = []
    for key, val in graph_block:
        if key == "node" and isinstance(val, list):
            raw = field(val, "id")
            if raw is None:
                raise ParseError("node record without id")
            try:
                orig = int(raw)
            except ValueError:
                raise ParseError(f"node record with non-integer id {raw!r}") from None
            if orig in ids:
                raise ParseError(f"duplicate node id {orig}")
            ids[orig] = len(labels)
            labels.append(orig)
        elif key == "edge" and isinstance(val, list):
            s, t = field(val, "source"), field(val, "target")
            if s is None or t is None:
                raise ParseError("edge record without source/target")
            try:
                a, b = int(s), int(t)
            except ValueError:
                raise ParseError(f"edge record with non-integer endpoint "
                                 f"(source {s!r} target {t!r})") from None
            for end in (a, b):
                if end not in ids:
                    raise ParseError(f"edge source {a} target {b}: "
                                     f"undeclared node id {end}")
            pairs.append((ids[a], ids[b]))
    return Graph(len(labels), pairs, labels=labels)


# -- preprocessing and validation -------------------------------------------

@dataclass(frozen=True)
class PruneResult:
    """Graph after iterative leaf pruning plus the id map back to the input."""

    pruned: Graph
    kept_to_original: tuple[int, ...]


def prune_leaves(g: Graph) -> PruneResult:
    """Iteratively remove vertices of degree < 2.

    Safe preprocessing for cycle search: a vertex on a cycle needs degree at
    least 2, so no cycle is ever lost. Idempotent. Labels of the pruned
    graph are inherited from ``g`` so reports stay in original ids.
    """
    deg = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)
    alive = np.ones(g.n, dtype=bool)
    queue = [v for v in range(g.n) if deg[v] < 2]
    while queue:
        v = queue.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] < 2:
                    queue.append(int(w))
    kept = [v for v in range(g.n) if alive[v]]
    remap = {v: i for i, v in enumerate(kept)}
    pairs = [(remap[u], remap[v]) for u, v in g.edge_list
             if alive[u] and alive[v]]
    pruned = Graph(len(kept), pairs, labels=[g.labels[v] for v in kept])
    return PruneResult(pruned=pruned, kept_to_original=tuple(kept))


def validate_cycle(g: Graph, cycle: Cycle) -> str | None:
    """Check a vertex sequence against the simple-cycle invariants.

    Returns None when ``cycle`` is a valid simple cycle of ``g`` (or the
    empty "no cycle" tuple), otherwise a short description of the first
    violated invariant.
    """
    if len(cycle) == 0:
        return None
    seen = set()
    for v in cycle:
        if not (0 <= v < g.n):
            return f"unknown vertex {v}"
        if v in seen:
            return f"duplicate vertex {v}"
        seen.add(v)
    if len(cycle) < 3:
        return f"cycle length {len(cycle)} < 3"
    k = len(cycle)
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not g.has_edge(u, v):
            return f"missing edge {{{u}, {v}}}"
    return None
