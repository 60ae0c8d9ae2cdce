"""The four perturbation operators and the local search built on them.

Two operators enlarge a cycle by replacing one of its edges with a
diversion path through outside vertices (one or two of them); two keep
the length and swap the interior of a short sub-path for fresh vertices,
which unsticks the search on plateaus. LS-III uses the first three
operators, LS-IV all four. Improvement always takes precedence.
"""
import numpy as np

from longcycle import (Graph, LS_III, LS_IV, LsBudget, local_search,
                       quad_grow, quad_swap, tri_grow, tri_swap)

rng = np.random.default_rng(4)

k4 = Graph(4, [(a, b) for a in range(4) for b in range(a)])
c = (0, 1, 2)
print("K4 triangle     :", c)
print("  tri_grow  ->", tri_grow(k4, c, rng), " (one vertex spliced in)")
print("  tri_swap  ->", tri_swap(k4, c, rng), " (same length, new vertex)")

g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 1)])
print("4-ring + path   :", (0, 1, 2, 3))
print("  quad_grow ->", quad_grow(g, (0, 1, 2, 3), rng),
      " (two vertices spliced in)")
print("  quad_swap ->", quad_swap(g, (0, 1, 2, 3), rng),
      " (two swapped for two)")

# a chorded ring: the triangle is a dead end for growth until a plateau
# move or the two-vertex splice escapes it
ring5_chord = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
out = local_search(ring5_chord, (0, 1, 2), LsBudget(variant=LS_III), rng)
print("chorded 5-ring, LS-III from the triangle ->", out)

out = local_search(ring5_chord, (0, 1, 2), LsBudget(variant=LS_IV), rng)
print("chorded 5-ring, LS-IV  from the triangle ->", out)
