"""Shared fixtures and independent reference oracles.

The oracles here deliberately avoid the library's own code paths: longest
cycles come from permutation enumeration, pruning from a dict-based peel,
acyclicity from union-find. Tests freeze expected values computed by these
oracles and keep the oracles around so the numbers can be recomputed.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations
from pathlib import Path

import pytest

from longcycle.graph import Graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


# -- tiny fixed graphs -------------------------------------------------------

@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def path3():
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def k4():
    return Graph(4, [(a, b) for a in range(4) for b in range(a)])


@pytest.fixture
def ring5():
    return Graph(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def ring5_chord():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


@pytest.fixture
def petersen():
    return Graph(10, petersen_edges())


def petersen_edges():
    return ([(i, (i + 1) % 5) for i in range(5)]
            + [(i, i + 5) for i in range(5)]
            + [(i + 5, ((i + 2) % 5) + 5) for i in range(5)])


def instance_path(name: str) -> Path:
    return DATA_DIR / name


def require_instance(name: str) -> Path:
    """Skip the calling test when a non-bundled instance is absent."""
    path = instance_path(name)
    if not path.exists():
        pytest.skip(f"instance {name} not present; run "
                    f"scripts/fetch_instances.py to download it")
    return path


# -- independent oracles ------------------------------------------------------

def naive_longest_cycle_length(g: Graph) -> int:
    """Longest simple cycle by raw permutation enumeration (n <= 9)."""
    es = {(min(u, v), max(u, v)) for u, v in g.edge_list}

    def is_cycle(seq) -> bool:
        k = len(seq)
        return all((min(seq[i], seq[(i + 1) % k]),
                    max(seq[i], seq[(i + 1) % k])) in es for i in range(k))

    for k in range(g.n, 2, -1):
        for sub in combinations(range(g.n), k):
            first = sub[0]
            for rest in permutations(sub[1:]):
                if rest[0] > rest[-1]:
                    continue  # each cycle once per direction
                if is_cycle((first,) + rest):
                    return k
    return 0


def peel_prune_oracle(edges, n) -> set[int]:
    """Vertices surviving iterative removal of degree-<2 vertices."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if len(adj[v]) < 2:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
    return set(adj)


def is_acyclic(g: Graph) -> bool:
    """Union-find cycle detection, independent of any solver."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edge_list:
        ru, rv = find(int(u)), find(int(v))
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus `extra_edges` random chords (connected)."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        edges.add(tuple(sorted((order[i], order[rng.randrange(i)]))))
    possible = [(a, b) for a in range(n) for b in range(a + 1, n)
                if (a, b) not in edges]
    rng.shuffle(possible)
    edges.update(possible[:extra_edges])
    return Graph(n, sorted(edges))


def vertices_on_cycles(g: Graph) -> set[int]:
    """All vertices lying on at least one simple cycle (exhaustive, small n)."""
    es = {(min(u, v), max(u, v)) for u, v in g.edge_list}
    out: set[int] = set()
    for k in range(3, g.n + 1):
        for sub in combinations(range(g.n), k):
            first = sub[0]
            for rest in permutations(sub[1:]):
                if rest[0] > rest[-1]:
                    continue
                seq = (first,) + rest
                if all((min(seq[i], seq[(i + 1) % k]),
                        max(seq[i], seq[(i + 1) % k])) in es
                       for i in range(k)):
                    out.update(seq)
    return out
