"""The pheromone model: proportional sampling and the inverse update.

Each edge carries a positive weight. Construction picks successors with
probability proportional to the weight on the connecting edge. The update
is the unusual part: edges of the best cycle found are *penalised* (times
the evaporation rate, floored at tau_min) while every other edge gains
1/(10 - f_best + f_star), steering later constructions toward territory
the best cycles have not used.
"""
from collections import Counter

import numpy as np

from longcycle import (Graph, init_pheromones, sample_neighbor,
                       sample_visit_order, update_pheromones)

star = Graph(4, [(0, 1), (0, 2), (0, 3)])
ps = init_pheromones(star, 10.0)
ps.tau[:] = [2.0, 3.0, 5.0]

rng = np.random.default_rng(1)
counts = Counter(sample_neighbor(ps, star, 0, (1, 2, 3), rng)
                 for _ in range(50_000))
print("weights 2:3:5 ->", {w: round(c / 50_000, 3)
                           for w, c in sorted(counts.items())})

orders = Counter(sample_visit_order(ps, star, 0, (1, 2, 3), rng)
                 for _ in range(20_000))
print("most common visit order:", orders.most_common(2))

# the inverse update on a triangle with a pendant edge
g = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
ps = init_pheromones(g, 10.0)
update_pheromones(ps, best=(0, 1, 2), f_best=3, f_star=3, rho=0.95)
for u, v in ((0, 1), (1, 2), (2, 0), (0, 3)):
    tag = "penalised " if ps.tau[g.edge_id(u, v)] < 10 else "reinforced"
    print(f"edge {{{u},{v}}}: {ps.tau[g.edge_id(u, v)]:.3f}  ({tag})")

# repeated updates never drop any edge below the floor
for _ in range(3000):
    update_pheromones(ps, (0, 1, 2), 3, 3, rho=0.5)
print("after 3000 harsh updates, min tau =", ps.tau.min(), "(floor 0.01)")
