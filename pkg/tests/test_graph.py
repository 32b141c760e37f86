import pytest
from hypothesis import given, strategies as st

from cdsenum.formats import (
    FormatError, format_cnf, format_dimacs, format_hypergraph, parse_cnf, parse_dimacs,
    parse_hypergraph,
)
from cdsenum.generators import gen_random_degenerate
from cdsenum.graph import (
    DisconnectedGraphError, Graph, GraphError, bits, canonical, degeneracy, from_mask,
    is_bipartite, is_cds, is_connected, is_minimal_cds, neighbors_within, to_mask,
)

from conftest import C4, C5, P3


def test_masks_roundtrip():
    assert from_mask(to_mask([5, 0, 3])) == (0, 3, 5)
    assert list(bits(0)) == []


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])


def test_parallel_edges_collapse():
    g = Graph(2, [(0, 1), (1, 0)])
    assert g.m == 1 and g.edges == ((0, 1),)


def test_neighbors_within():
    assert neighbors_within(C5, 0, {1, 2, 4}) == (1, 4)


def test_connectivity():
    assert is_connected(C4)
    assert not is_connected(C4, {0, 2})
    with pytest.raises(GraphError):
        is_connected(C4, set())


def test_cds_predicates():
    assert is_cds(P3, {1})
    assert is_minimal_cds(P3, {1})
    assert is_cds(P3, {0, 1}) and not is_minimal_cds(P3, {0, 1})
    assert not is_cds(C4, {0, 2})
    assert is_minimal_cds(C4, {0, 1})
    with pytest.raises(DisconnectedGraphError):
        is_cds(Graph(2), {0})
    with pytest.raises(GraphError):
        is_cds(C4, [])


def test_single_vertex_graph():
    assert is_minimal_cds(Graph(1), {0})


def test_degeneracy_examples():
    assert degeneracy(C5).degeneracy == 2
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert degeneracy(k4).degeneracy == 3
    tree = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert degeneracy(tree).degeneracy == 1


@given(st.integers(1, 25), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_elimination_order_witnesses_degeneracy(n, d, seed):
    g = gen_random_degenerate(n, d, seed)
    order = degeneracy(g)
    assert sorted(order.order) == list(range(n))
    assert max(order.later_degrees(g), default=0) == order.degeneracy <= d


def test_bipartite():
    assert is_bipartite(C4) and not is_bipartite(C5)


def test_canonical():
    assert canonical([{2, 1}, (0,)]) == [(0,), (1, 2)]


def test_dimacs_roundtrip():
    text = format_dimacs(C5, u=[0, 3], comments=["five cycle"])
    g, u = parse_dimacs(text)
    assert g == C5 and u == (0, 3)
    assert "c U 1 4" in text


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "p edge 2 1\ne 1 3\n",
    "p edge 2 2\ne 1 2\n",
    "p edge 2 1\ne 1 1\n",
    "p edge x 1\n",
    "q 1\n",
    "",
])
def test_dimacs_errors(text):
    with pytest.raises(FormatError):
        parse_dimacs(text)


def test_cnf_roundtrip():
    text = format_cnf(3, [[1, -2, 3], [-1, 2, 2]])
    assert parse_cnf(text) == (3, [[1, -2, 3], [-1, 2, 2]])
    with pytest.raises(FormatError):
        parse_cnf("p cnf 2 1\n1 3 0\n")


def test_hypergraph_roundtrip():
    text = format_hypergraph(3, [(0, 1), (2,)])
    assert parse_hypergraph(text) == (3, [(0, 1), (2,)])
    with pytest.raises(FormatError):
        parse_hypergraph("h 2 1\n0 5\n")
