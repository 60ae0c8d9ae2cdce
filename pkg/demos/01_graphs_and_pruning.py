"""Loading graphs and shrinking them before cycle search.

Three file formats are supported (plain edge lists, the GML subset used
by public network datasets, and DIMACS edge files). Since a vertex on a
cycle needs degree at least 2, iteratively peeling leaves can shrink an
instance a lot without losing any cycle.
"""
from pathlib import Path

from longcycle import load_graph, parse_dimacs, parse_edge_list, prune_leaves

DATA = Path(__file__).resolve().parent.parent / "data"

# Any whitespace-separated id pairs work; ids are remapped densely and the
# originals kept as labels.
g = parse_edge_list("""
# a triangle with a tail
10 20
20 30
30 10
10 99
99 98
""")
print("edge list ->", g, "labels:", g.labels)

res = prune_leaves(g)
print("after pruning:", res.pruned, "kept original ids:",
      [g.labels[v] for v in res.kept_to_original])

d = parse_dimacs("""c toy DIMACS file
p edge 4 4
e 1 2
e 2 3
e 3 4
e 4 1
""")
print("dimacs ->", d, "(1-based ids kept as labels)")

zachary = load_graph(DATA / "zachary.gml")
zp = prune_leaves(zachary)
print(f"zachary: {zachary.n} vertices / {zachary.edge_count} edges, "
      f"pruned to {zp.pruned.n} / {zp.pruned.edge_count}")

lesmis = load_graph(DATA / "lesmis.gml")
lp = prune_leaves(lesmis)
print(f"lesmis:  {lesmis.n} vertices / {lesmis.edge_count} edges, "
      f"pruned to {lp.pruned.n} / {lp.pruned.edge_count}")
