import pytest
from hypothesis import given, settings, strategies as st

from cdsenum.generators import gen_gtk, gen_random_degenerate
from cdsenum.graph import Graph
from cdsenum.oracle import (
    ExtensionUndecided, OracleCapExceeded, enumerate_bruteforce, extension_exists,
    find_extension, minimal_hitting_sets,
)

from conftest import C4, C5, P3


def test_bruteforce_examples():
    assert enumerate_bruteforce(P3) == [(1,)]
    assert enumerate_bruteforce(C5) == [(0, 1, 2), (0, 1, 4), (0, 3, 4), (1, 2, 3), (2, 3, 4)]
    g, _ = gen_gtk(2, 2)
    assert g.n == 11 and len(enumerate_bruteforce(g)) == 16


def test_bruteforce_cap():
    path = Graph(25, [(i, i + 1) for i in range(24)])
    with pytest.raises(OracleCapExceeded):
        enumerate_bruteforce(path)
    assert enumerate_bruteforce(Graph(5, [(i, i + 1) for i in range(4)]), max_n=5) == [(1, 2, 3)]


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 11), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_bruteforce_antichain(n, d, seed):
    sols = [set(s) for s in enumerate_bruteforce(gen_random_degenerate(n, d, seed))]
    assert sols
    for a in sols:
        for b in sols:
            assert a is b or not a <= b


@pytest.mark.parametrize("method", ["bruteforce", "branching"])
def test_extension_examples(method):
    assert extension_exists(P3, {1}, method=method)
    assert not extension_exists(P3, {0}, method=method)
    assert not extension_exists(C4, {0, 2}, method=method)
    assert extension_exists(C4, set(), method=method)
    assert find_extension(C4, {3}, method=method) in [(0, 3), (2, 3)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_empty_extension_always_exists(n, d, seed):
    assert extension_exists(gen_random_degenerate(n, d, seed), ())


def test_extension_budget_is_reported_not_guessed():
    g, _ = gen_gtk(4, 2)
    with pytest.raises(ExtensionUndecided):
        extension_exists(g, [0, 1, 2], budget=5, method="branching")


def test_hitting_sets_examples():
    assert minimal_hitting_sets(2, [{0}, {1}]) == ([(0, 1)], True)
    assert minimal_hitting_sets(2, [{0, 1}]) == ([(0,), (1,)], True)
    # three elements, four sets, one of them the singleton {x3}
    hs, ok = minimal_hitting_sets(3, [{0, 1}, {1, 2}, {0, 2}, {2}])
    assert ok and all(2 in h for h in hs)
    assert hs == [(0, 2), (1, 2)]
    assert minimal_hitting_sets(2, [{0}, {1}], u={0}) == ([(0, 1)], True)
    assert minimal_hitting_sets(2, [{0, 1}], u={0, 1}) == ([], False)


def test_hitting_sets_errors():
    with pytest.raises(ValueError):
        minimal_hitting_sets(2, [set()])
    with pytest.raises(OracleCapExceeded):
        minimal_hitting_sets(21, [{0}])
