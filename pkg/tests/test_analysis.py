import math

import pytest
from hypothesis import given, strategies as st

from cdsenum.analysis import (
    GENERAL_WEIGHTS, TABLE_WEIGHTS, BranchingVector, WeightError, WeightSet, _lin,
    branching_number, catalog_max, check_catalog, claimed_decreases, vectors_2degenerate,
    vectors_general,
)


def test_examples():
    assert branching_number((1, 1)) == pytest.approx(2, abs=1e-9)
    assert branching_number(BranchingVector((2, 2), "x")) == pytest.approx(math.sqrt(2), abs=1e-9)
    a = d = 0.106
    assert branching_number((1, 2, 3, 4 - a, 5 - d - a)) < 1.9767


def test_vector_validation():
    with pytest.raises(ValueError):
        BranchingVector((1, -1), "bad")
    with pytest.raises(ValueError):
        BranchingVector((), "empty")


def test_weight_validation():
    for bad in [(0, 1, 0.1), (0.1, 0, 0.1), (0.1, 1.2, 0.1), (0.1, 1, 1)]:
        with pytest.raises(WeightError):
            WeightSet(*bad).validate()
    with pytest.raises(WeightError):
        vectors_2degenerate(GENERAL_WEIGHTS)


def test_parser():
    assert _lin("3+b-2a") == (3, -2, 1, 0, 0)
    assert _lin("2+2b+m") == (2, 0, 2, 0, 1)
    assert _lin("b") == (0, 0, 1, 0, 0)
    with pytest.raises(ValueError):
        _lin("3*b")


def test_table_rows():
    vecs = {v.label: v for v in vectors_2degenerate(TABLE_WEIGHTS)}
    assert len(vecs) == 11
    assert vecs["B6"].number < 1.6420
    assert vecs["B10"].number < 1.9420
    assert vecs["B12"].number == pytest.approx(2, abs=1e-9)
    worst = max((v for v in vecs.values() if v.rule != "B12"), key=lambda v: v.number)
    assert worst.label == "B9"


def test_general_rows():
    vecs = {v.label: v for v in vectors_general(GENERAL_WEIGHTS)}
    assert len(vecs) == 27
    assert vecs["B10 n1=0 n2=2"].number < 1.9453
    assert vecs["B6 v1,v2 dominated"].number < 1.5817
    top = sorted(vecs.values(), key=lambda v: -v.number)[:4]
    assert {v.rule for v in top} == {"B3", "B4", "B9", "B12"}
    assert "B9 y undominated" in {v.label for v in top}


def test_check_catalog_flags_failures():
    rows = check_catalog("2deg", WeightSet(0.3, 1.0, 0.3))
    assert not all(r.ok for r in rows)


def test_catalog_max_labels():
    assert catalog_max("2deg", TABLE_WEIGHTS)[1] == "B9"
    with pytest.raises(ValueError):
        catalog_max("cubic", TABLE_WEIGHTS)


@given(st.lists(st.floats(0.1, 5), min_size=2, max_size=6), st.floats(0.1, 5))
def test_monotone(r, extra):
    base = branching_number(r)
    assert branching_number(r + [extra]) > base
    bumped = list(r)
    bumped[0] += 0.5
    assert branching_number(bumped) < base


@given(st.permutations([1.0, 2.5, 3.2, 4.1]))
def test_permutation_invariant(p):
    assert branching_number(p) == pytest.approx(branching_number([1.0, 2.5, 3.2, 4.1]), abs=1e-9)


@given(st.floats(0, 10))
def test_three_way_split_not_worse_than_binary(g):
    assert branching_number((1, 2, 2 + g)) <= 2 + 1e-9


def test_claimed_decreases():
    assert claimed_decreases("R1", TABLE_WEIGHTS) == (0.0,)
    assert claimed_decreases("R5", GENERAL_WEIGHTS) == pytest.approx((1 - 0.143516,))
    b6 = claimed_decreases("B6", GENERAL_WEIGHTS)
    a, b, d = 0.110901, 0.984405, 0.143516
    assert b6 == pytest.approx((min(1 + a - d, 1 + a, b + a), min(2 - d, 1 + b, 2 * b + a)))
    assert len(claimed_decreases("B10", TABLE_WEIGHTS)) == 5
    with pytest.raises(KeyError):
        claimed_decreases("B11", TABLE_WEIGHTS)
