"""The probabilistic DFS construction.

A probe grows a depth-first search from one root, ordering each vertex's
eligible neighbours by pheromone-proportional sampling, and records the
longest simple cycle closing back at the root. A full construction probes
every root and keeps the best. With equal pheromones this is an unbiased
randomized DFS; skewed pheromones steer it.
"""
from collections import Counter

import numpy as np

from longcycle import Graph, construct_cycle, init_pheromones, probe_from_root

ring5_chord = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
ps = init_pheromones(ring5_chord, 10.0)
rng = np.random.default_rng(0)

hist = Counter(len(probe_from_root(ring5_chord, ps, 0, rng))
               for _ in range(20_000))
print("probe from root 0, uniform pheromones:",
      {k: round(v / 20_000, 3) for k, v in sorted(hist.items())},
      "(exact: 4 -> 1/3, 5 -> 2/3)")

# skew the pheromones toward the chord and the short cycle wins more often
ps.tau[ring5_chord.edge_id(0, 2)] = 1000.0
hist = Counter(len(probe_from_root(ring5_chord, ps, 0, rng))
               for _ in range(20_000))
print("probe with a heavy chord {0,2}:   ",
      {k: round(v / 20_000, 3) for k, v in sorted(hist.items())})

petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                 + [(i, i + 5) for i in range(5)]
                 + [(i + 5, ((i + 2) % 5) + 5) for i in range(5)])
pps = init_pheromones(petersen, 10.0)
lengths = [len(construct_cycle(petersen, pps, rng)) for _ in range(10)]
print("petersen constructions:", lengths,
      "(hypohamiltonian: the ceiling is 9, never 10)")

# the literal single-successor reading is a pure biased walk; it can miss
walk = Counter(len(construct_cycle(petersen, pps, rng,
                                   single_successor=True))
               for _ in range(2000))
print("single-successor walk outcome histogram:",
      dict(sorted(walk.items())))
