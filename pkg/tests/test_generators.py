import random

import pytest
from hypothesis import given, strategies as st

from cdsenum.generators import (
    Formula, gen_base_gt, gen_gtk, gen_hs_split, gen_random_degenerate, gen_sat_gadget,
    gt_count, random_3cnf,
)
from cdsenum.graph import GraphError, degeneracy, is_bipartite, is_connected, to_mask
from cdsenum.oracle import enumerate_bruteforce, minimal_hitting_sets


def test_base_graph_layout():
    g = gen_base_gt(4, clique_x=True)
    assert (g.n, g.m) == (9, 22)
    assert g.adjacency[0] == (1, 2, 3, 5, 6, 7)
    assert g.adjacency[8] == (4, 5, 6, 7)
    assert gen_base_gt(4, clique_x=False).m == 16


def test_base_graph_clique_free_is_bipartite():
    g = gen_base_gt(3, clique_x=False)
    assert is_bipartite(g)
    assert all(not g.has_edge(i, j) for i in range(3) for j in range(3))


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_base_graph_count_formula(t):
    g = gen_base_gt(t, clique_x=True)
    x = to_mask(range(t))
    assert sum(1 for s in enumerate_bruteforce(g) if to_mask(s) & x) == gt_count(t)


def test_parameter_checks():
    with pytest.raises(GraphError):
        gen_base_gt(1)
    with pytest.raises(GraphError):
        gen_gtk(3, 0)


def test_composed_layout():
    g, hub = gen_gtk(3, 3)
    assert g.n == 22 and hub == 21
    assert g.adjacency[hub] == (0, 1, 2, 7, 8, 9, 14, 15, 16)
    g, hub = gen_gtk(4, 2)
    assert g.n == 19


def test_composed_single_copy_is_informational():
    # with one copy the hub is not a cut vertex; the product formula is not
    # claimed there, so only record that the graph is well formed
    g, _ = gen_gtk(2, 1)
    assert is_connected(g) and len(enumerate_bruteforce(g)) >= 1


def test_sat_gadget_layout():
    f = Formula(3, ((1, -2, 3),))
    g, u = gen_sat_gadget(f)
    assert u == (0, 5, 10)
    s = g.n - 1
    a, b, c = 15, 16, 17
    assert g.adjacency[c] == (a,)
    assert set(g.adjacency[b]) == {a, 1, 7}  # v_1 and v_bar_2
    assert set(g.adjacency[a]) == {b, c, 11}  # v_3
    assert set(g.adjacency[s]) == {1, 2, 6, 7, 11, 12}


def test_sat_gadget_repeated_literal_edges():
    f = Formula.from_clauses(2, [[1, 1, 2], [-2]])
    g, _ = gen_sat_gadget(f)
    expect = 7 * 2 + sum(len({c[0], c[1]}) + 3 for c in f.clauses)
    assert g.m == expect


def test_formula_validation():
    with pytest.raises(ValueError):
        Formula(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        Formula(2, ((1, 2),))
    assert Formula.from_clauses(2, [[1]]).clauses == ((1, 1, 1),)
    assert not Formula.from_clauses(1, [[1], [-1]]).satisfiable()


@given(st.integers(1, 6), st.integers(0, 8), st.integers(0, 10 ** 6))
def test_sat_gadget_is_2_degenerate(n, m, seed):
    f = random_3cnf(n, m, random.Random(seed))
    g, _ = gen_sat_gadget(f)
    assert degeneracy(g).degeneracy <= 2
    assert g.n == 5 * n + 3 * m + 1


def test_split_graph_examples():
    g, u = gen_hs_split(2, [{0}, {1}], u=[1])
    assert u == (1,)
    assert enumerate_bruteforce(g) == [(0, 1)] == minimal_hitting_sets(2, [{0}, {1}])[0]
    with pytest.raises(ValueError):
        gen_hs_split(2, [set()])
    with pytest.raises(ValueError):
        gen_hs_split(2, [{0}], u=[3])


def test_split_graph_single_full_hyperedge():
    # the set vertex is adjacent to the whole clique, hence universal, and
    # {3} is a minimal CDS with no hitting-set counterpart
    g, _ = gen_hs_split(3, [{0, 1, 2}])
    assert enumerate_bruteforce(g) == [(0,), (1,), (2,), (3,)]
    assert minimal_hitting_sets(3, [{0, 1, 2}])[0] == [(0,), (1,), (2,)]


@given(st.integers(1, 30), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_random_degenerate(n, d, seed):
    g = gen_random_degenerate(n, d, seed)
    assert g.n == n and is_connected(g)
    assert degeneracy(g).degeneracy <= d
    assert gen_random_degenerate(n, d, seed) == g


def test_random_tree():
    g = gen_random_degenerate(20, 1, 3)
    assert g.m == 19
