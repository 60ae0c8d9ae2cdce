"""Regenerate the bundled instance files from networkx's built-in datasets.

Only zachary (karate club) and lesmis (Les Miserables coappearances) are
available offline; both match the published network-repository versions
(34 vertices / 78 edges and 77 / 254). Run from the repository root:

    python3 scripts/make_builtin_instances.py
"""
from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parent.parent / "data"


def write_gml(path: Path, nodes: list, edges: list[tuple[int, int]],
              labels: dict | None = None) -> None:
    lines = ["graph [", "  directed 0"]
    for nid in nodes:
        if labels:
            lines.append(f'  node [ id {nid} label "{labels[nid]}" ]')
        else:
            lines.append(f"  node [ id {nid} ]")
    for u, v in edges:
        lines.append(f"  edge [ source {u} target {v} ]")
    lines.append("]")
    path.write_text("\n".join(lines) + "\n")


def main() -> None:
    DATA.mkdir(exist_ok=True)

    karate = nx.karate_club_graph()
    nodes = sorted(karate.nodes())
    edges = sorted((min(u, v), max(u, v)) for u, v in karate.edges())
    write_gml(DATA / "zachary.gml", nodes, edges)
    print(f"zachary.gml: {len(nodes)} nodes, {len(edges)} edges")

    lesmis = nx.les_miserables_graph()
    names = sorted(lesmis.nodes())
    index = {name: i for i, name in enumerate(names)}
    edges = sorted((min(index[a], index[b]), max(index[a], index[b]))
                   for a, b in lesmis.edges())
    write_gml(DATA / "lesmis.gml", list(range(len(names))), edges,
              labels=dict(enumerate(names)))
    print(f"lesmis.gml: {len(names)} nodes, {len(edges)} edges")


if __name__ == "__main__":
    main()
