import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from longcycle.graph import (Graph, ParseError, parse_dimacs, parse_edge_list,
                             parse_gml, prune_leaves, validate_cycle)
from longcycle.solvers import exact_longest_cycle

from conftest import peel_prune_oracle, random_connected_graph


# -- edge list parsing --------------------------------------------------------

def test_edge_list_triangle():
    g = parse_edge_list("0 1\n1 2\n2 0\n")
    assert g.n == 3 and g.edge_count == 3
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_edge_list_dedup_and_self_loop():
    g = parse_edge_list("0 1\n1 0\n0 0\n")
    assert g.n == 2 and g.edge_count == 1
    assert g.diagnostics.self_loops_dropped == 1
    assert g.diagnostics.duplicate_edges_dropped == 1


def test_edge_list_malformed_token():
    with pytest.raises(ParseError, match="line 1"):
        parse_edge_list("a b")


def test_edge_list_empty_input():
    g = parse_edge_list("")
    assert g.n == 0 and g.edge_count == 0


def test_edge_list_comments_and_extra_columns():
    g = parse_edge_list("# header\n% more\n10 20 1.5\n20 30\n")
    assert g.n == 3 and g.edge_count == 2
    assert g.labels == (10, 20, 30)  # first-appearance order


def test_edge_list_single_token_line():
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("0 1\n7\n")


# -- GML parsing --------------------------------------------------------------

GML_TRIANGLE = """
Creator "someone"
graph [
  node [ id 0 label "a" ]
  node [ id 1 label "b [tricky]" ]
  node [ id 2 graphics [ x 0.5 y 1.0 ] ]
  edge [ source 0 target 1 ]
  edge [ source 1 target 2 ]
  edge [ source 2 target 0 ]
]
"""


def test_gml_triangle():
    g = parse_gml(GML_TRIANGLE)
    assert g.n == 3 and g.edge_count == 3
    assert g.labels == (0, 1, 2)


def test_gml_directed_collapse():
    g = parse_gml("graph [ directed 1 node [ id 0 ] node [ id 1 ] "
                  "edge [ source 0 target 1 ] edge [ source 1 target 0 ] ]")
    assert g.n == 2 and g.edge_count == 1
    assert g.diagnostics.duplicate_edges_dropped == 1


def test_gml_undeclared_node():
    with pytest.raises(ParseError, match="undeclared node id 5"):
        parse_gml("graph [ node [ id 0 ] edge [ source 5 target 0 ] ]")


def test_gml_missing_graph_block():
    with pytest.raises(ParseError, match="graph"):
        parse_gml('Creator "x"')


def test_gml_duplicate_node_id():
    with pytest.raises(ParseError, match="duplicate node id 3"):
        parse_gml("graph [ node [ id 3 ] node [ id 3 ] ]")


def test_gml_node_without_id():
    with pytest.raises(ParseError, match="without id"):
        parse_gml('graph [ node [ label "x" ] ]')


def test_gml_noninteger_ids():
    g = parse_gml("graph [ node [ id 7 ] node [ id 3 ] "
                  "edge [ source 7 target 3 ] ]")
    assert g.labels == (7, 3)
    assert g.edge_count == 1


# -- DIMACS parsing -----------------------------------------------------------

def test_dimacs_triangle():
    g = parse_dimacs("c comment\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n")
    assert g.n == 3 and g.edge_count == 3
    assert g.labels == (1, 2, 3)


def test_dimacs_missing_header():
    with pytest.raises(ParseError, match="before 'p edge'"):
        parse_dimacs("e 1 2\n")


def test_dimacs_id_out_of_range():
    with pytest.raises(ParseError, match=r"outside \[1, 2\]"):
        parse_dimacs("p edge 2 1\ne 1 3\n")


def test_dimacs_unknown_record():
    with pytest.raises(ParseError, match="unknown record"):
        parse_dimacs("p edge 2 1\nx 1 2\n")


def test_dimacs_duplicate_header():
    with pytest.raises(ParseError, match="duplicate problem line"):
        parse_dimacs("p edge 2 1\np edge 2 1\n")


def test_dimacs_isolated_vertices_counted():
    g = parse_dimacs("p edge 5 1\ne 1 2\n")
    assert g.n == 5 and g.edge_count == 1


# -- structural invariants ----------------------------------------------------

edge_lists = st.lists(
    st.tuples(st.integers(0, 11), st.integers(0, 11)), max_size=40)


@given(edges=edge_lists)
@settings(max_examples=120, deadline=None)
def test_graph_invariants(edges):
    g = Graph(12, edges)
    # adjacency symmetry and degree sum
    for v in range(g.n):
        for w in g.neighbors(v):
            assert v in g.neighbors(int(w))
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count
    # edge_index is a bijection onto [0, edge_count)
    eids = sorted(g.edge_id(int(u), int(v)) for u, v in g.edge_list)
    assert eids == list(range(g.edge_count))
    # neighbour arrays sorted, no loops or duplicates
    for v in range(g.n):
        nb = list(g.neighbors(v))
        assert nb == sorted(set(nb)) and v not in nb


def test_graph_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside vertex range"):
        Graph(2, [(0, 5)])


def test_graph_arrays_immutable(triangle):
    indptr, adj, arc = triangle.csr()
    for arr in (indptr, adj, arc, triangle.edge_list):
        with pytest.raises(ValueError):
            arr[0] = 0


# -- leaf pruning -------------------------------------------------------------

def test_prune_path_dissolves(path3):
    res = prune_leaves(path3)
    assert res.pruned.n == 0 and res.kept_to_original == ()


def test_prune_pendant(triangle):
    g = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    res = prune_leaves(g)
    assert res.pruned.n == 3 and res.pruned.edge_count == 3
    assert res.kept_to_original == (0, 1, 2)


def test_prune_zachary():
    # frozen from the independent peel oracle over the bundled instance
    g = parse_gml((__import__("conftest").DATA_DIR / "zachary.gml")
                  .read_text())
    res = prune_leaves(g)
    assert res.pruned.n == 33
    kept = peel_prune_oracle([(int(u), int(v)) for u, v in g.edge_list], g.n)
    assert set(res.kept_to_original) == kept


def test_prune_chain_of_pendants():
    # 4,5 only become leaves after each other's removal
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5)])
    res = prune_leaves(g)
    assert res.pruned.n == 3


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_prune_idempotent_and_cycle_safe(seed):
    import random as _random
    rnd = _random.Random(seed)
    n = rnd.randrange(1, 10)
    edges = [(a, b) for a in range(n) for b in range(a)
             if rnd.random() < 0.35]
    g = Graph(n, edges)
    res = prune_leaves(g)
    again = prune_leaves(res.pruned)
    assert again.pruned.n == res.pruned.n
    assert again.kept_to_original == tuple(range(res.pruned.n))
    # peel oracle agreement
    assert set(res.kept_to_original) == peel_prune_oracle(edges, n)
    # every pruned-graph vertex has degree >= 2
    assert all(res.pruned.degree(v) >= 2 for v in range(res.pruned.n))


@pytest.mark.parametrize("seed", range(12))
def test_prune_preserves_longest_cycle(seed):
    g = random_connected_graph(8, seed % 4, seed)
    res = prune_leaves(g)
    before = len(exact_longest_cycle(g))
    after = len(exact_longest_cycle(res.pruned))
    assert before == after


# -- cycle validation ---------------------------------------------------------

def test_validate_ok(triangle):
    assert validate_cycle(triangle, (0, 1, 2)) is None


def test_validate_duplicate(triangle):
    assert "duplicate vertex" in validate_cycle(triangle, (0, 1, 0))


def test_validate_missing_edge(path3):
    assert "missing edge" in validate_cycle(path3, (0, 1, 2))


def test_validate_too_short(triangle):
    assert "< 3" in validate_cycle(triangle, (0, 1))


def test_validate_unknown_vertex(triangle):
    assert "unknown vertex" in validate_cycle(triangle, (0, 1, 9))


def test_validate_empty_is_ok(triangle):
    assert validate_cycle(triangle, ()) is None
