import importlib
import math

import pytest
from hypothesis import given, settings, strategies as st

from cdsenum import _kernels_py as py
from cdsenum import kernels
from cdsenum.analysis import GENERAL, TWO_DEGENERATE, _flat
from cdsenum.generators import gen_random_degenerate

try:
    cy = importlib.import_module("cdsenum._ckernels")
except ImportError:  # extension not built
    cy = None

BACKENDS = [py] + ([cy] if cy is not None else [])
needs_cy = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if cy is not None:
        assert kernels.BACKEND == "cython"


@pytest.mark.parametrize("k", BACKENDS)
def test_branching_number_examples(k):
    assert abs(k.branching_number((1, 1)) - 2) < 1e-9
    assert abs(k.branching_number((2, 2)) - math.sqrt(2)) < 1e-9
    assert abs(k.branching_number((1, 2)) - (1 + math.sqrt(5)) / 2) < 1e-9
    assert k.branching_number((3,)) == 1.0
    with pytest.raises(ValueError):
        k.branching_number((1, 0))
    with pytest.raises(ValueError):
        k.branching_number(())


@pytest.mark.parametrize("k", BACKENDS)
def test_branching_number_tiny_components_terminates(k):
    # huge brackets used to stall an absolute-width bisection
    assert k.branching_number((0.01, 0.02)) > 1e10


@needs_cy
@given(st.lists(st.floats(0.05, 6), min_size=1, max_size=8))
def test_branching_number_parity(r):
    assert cy.branching_number(r) == pytest.approx(py.branching_number(r), abs=1e-9)


@needs_cy
@settings(max_examples=40, deadline=None)
@given(st.integers(1, 11), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_minimal_cds_masks_parity(n, d, seed):
    g = gen_random_degenerate(n, d, seed)
    assert cy.minimal_cds_masks(g.adj_masks, g.n) == py.minimal_cds_masks(g.adj_masks, g.n)


@needs_cy
@given(st.integers(1, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))))
def test_hitting_parity(case):
    ground, sets = case
    assert cy.minimal_hitting_masks(sets, ground) == py.minimal_hitting_masks(sets, ground)


@needs_cy
@pytest.mark.parametrize("catalog", [TWO_DEGENERATE, GENERAL])
@given(st.floats(0.01, 0.99), st.floats(0.01, 1.0), st.floats(0.01, 0.99))
def test_catalog_max_parity(catalog, a, b, d):
    coef, starts = _flat(catalog)
    vc, ic = cy.catalog_max(coef, starts, a, b, d)
    vp, ip = py.catalog_max(coef, starts, a, b, d)
    assert vc == pytest.approx(vp, abs=1e-9)
    assert ic == ip or abs(vc - vp) < 1e-9


@needs_cy
def test_grid_min_parity():
    coef, starts = _flat(GENERAL)
    grid = [0.1, 0.3, 0.5]
    bc, pc = cy.grid_min(coef, starts, grid, [0.9, 1.0], grid)
    bp, pp = py.grid_min(coef, starts, grid, [0.9, 1.0], grid)
    assert bc == pytest.approx(bp, abs=1e-9) and pc == pp


@pytest.mark.parametrize("k", BACKENDS)
def test_catalog_max_cutoff(k):
    coef, starts = _flat(GENERAL)
    v, _ = k.catalog_max(coef, starts, 0.110901, 0.984405, 0.143516, 1.5)
    assert v == math.inf


@needs_cy
def test_compiled_size_limit():
    with pytest.raises(ValueError):
        cy.minimal_cds_masks([0] * 31, 31)


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, CDSENUM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from cdsenum import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
