"""Branching-vector arithmetic for the running-time analysis.

Every branching vector in the catalogs is affine in the weights, so each
component is stored as five coefficients over
``(1, alpha, beta, delta, min(beta, 1 - alpha))``. The kernels evaluate the
whole catalog at a weight point in one call; the optimizer leans on that.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import kernels

MARGIN = 1e-6


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class WeightSet:
    alpha: float
    beta: float
    delta: float

    def validate(self) -> "WeightSet":
        if not (0 < self.alpha < 1 and 0 < self.delta < 1 and 0 < self.beta <= 1):
            raise WeightError(
                f"weights out of range: alpha={self.alpha}, beta={self.beta}, "
                f"delta={self.delta} (need 0<alpha<1, 0<delta<1, 0<beta<=1)"
            )
        return self

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.delta)


TABLE_WEIGHTS = WeightSet(0.106, 1.0, 0.106)
GENERAL_WEIGHTS = WeightSet(0.110901, 0.984405, 0.143516)


@dataclass(frozen=True)
class BranchingVector:
    decreases: tuple[float, ...]
    label: str
    rule: str = ""
    bound: float | None = None
    # rows printed without a number are compared against another row instead
    dominated_by: str | None = None
    exact: bool = False

    def __post_init__(self):
        if not self.decreases:
            raise ValueError("branching vector needs at least one component")
        if any(r <= 0 for r in self.decreases):
            raise ValueError(f"{self.label}: nonpositive component in {self.decreases}")

    @property
    def t(self) -> int:
        return len(self.decreases)

    @property
    def number(self) -> float:
        return branching_number(self.decreases)


def branching_number(v) -> float:
    """Unique root ``lambda >= 1`` of ``sum(lambda ** -r_i) = 1``.

    Accepts a :class:`BranchingVector` or a plain sequence. Length-one
    vectors (reductions) give 1.
    """
    r = v.decreases if isinstance(v, BranchingVector) else tuple(v)
    return kernels.branching_number(r)


# -- catalog templates ---------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*\.?\d*)([abdm]?)")
_SLOT = {"": 0, "a": 1, "b": 2, "d": 3, "m": 4}


def _lin(expr: str) -> tuple[float, ...]:
    """``"3+b-2a"`` -> coefficient row. ``a``/``b``/``d`` are the weights,
    ``m`` is ``min(b, 1-a)``."""
    row = [0.0] * 5
    pos = 0
    s = expr.replace(" ", "")
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {expr!r} at {pos}")
        sign, num, var = mt.groups()
        if not num and not var:
            raise ValueError(f"cannot parse {expr!r} at {pos}")
        coef = float(num) if num else 1.0
        row[_SLOT[var]] += -coef if sign == "-" else coef
        pos = mt.end()
    return tuple(row)


@dataclass(frozen=True)
class Template:
    rule: str
    label: str
    rows: tuple[tuple[float, ...], ...]
    bound: float | None = None
    dominated_by: str | None = None
    exact: bool = False

    def instantiate(self, w: WeightSet) -> BranchingVector:
        a, b, d = w.alpha, w.beta, w.delta
        m = min(b, 1.0 - a)
        dec = tuple(c0 + ca * a + cb * b + cd * d + cm * m for c0, ca, cb, cd, cm in self.rows)
        return BranchingVector(dec, self.label, self.rule, self.bound, self.dominated_by, self.exact)


def _t(rule, label, exprs, bound=None, dominated_by=None, exact=False):
    return Template(rule, label, tuple(_lin(e) for e in exprs), bound, dominated_by, exact)


TWO_DEGENERATE = (
    _t("B1", "B1", ["1", "1+a"], dominated_by="B3"),
    _t("B2", "B2", ["1", "1+d"], dominated_by="B4"),
    _t("B3", "B3", ["1", "2", "2+a"], 1.9766),
    _t("B4", "B4", ["1", "2", "2+d"], 1.9766),
    _t("B5", "B5", ["2-d", "3-d-a", "2-d", "3-d"], 1.8269),
    _t("B6", "B6", ["1+a-d", "2-d"], 1.6420),
    _t("B7", "B7", ["1", "4-2a", "2"], 1.7691),
    _t("B8", "B8", ["1", "2", "3", "4-a"], 1.9333),
    _t("B9", "B9", ["1", "2", "3", "4-a", "5-d-a"], 1.9767),
    _t("B10", "B10", ["1", "2", "3", "5-2a", "5-2a"], 1.9420),
    _t("B12", "B12", ["b", "3-2b"], 2.0, exact=True),
)

_B10_SECOND = {0: "1+b", 1: "2", 2: "3-b"}
_B10_THIRD = {0: "2+b", 1: "3", 2: "4-b"}
_B10_OUT = {0: "2+3b", 1: "3+2b-a", 2: "4+b-2a"}
_B10_BOUNDS = {
    (0, 0): 1.9430, (0, 1): 1.9440, (0, 2): 1.9453,
    (1, 0): 1.9426, (1, 1): 1.9437, (1, 2): 1.9449,
    (2, 0): 1.9425, (2, 1): 1.9435, (2, 2): 1.9448,
}

GENERAL = (
    _t("B1", "B1", ["b", "b+a"], 1.9489),
    _t("B2", "B2", ["b", "b+d"], 1.9297),
    _t("B3", "B3", ["b", "b+1", "b+1+a"], 1.9896),
    _t("B4", "B4", ["b", "2b", "2b+d"], 1.9896),
    _t("B5", "B5 v1,v2 undominated", ["2-d", "3-d-a", "2-d", "3-d"], 1.8463),
    _t("B5", "B5 v1 undominated, v2 dominated", ["2-d", "2-a+b", "2-d", "2+b"], 1.8236),
    _t("B5", "B5 v1,v2 dominated", ["1+b", "1+2b", "1+b", "1+2b"], 1.7785),
    _t("B6", "B6 v1,v2 undominated", ["1+a-d", "2-d"], 1.6635),
    _t("B6", "B6 v1 undominated, v2 dominated", ["1+a", "1+b"], 1.5855),
    _t("B6", "B6 v1,v2 dominated", ["b+a", "2b+a"], 1.5817),
    _t("B7", "B7 v1,v2 undominated", ["b", "b+3-2a", "1+b"], 1.7796),
    _t("B7", "B7 v1 undominated, v2 dominated", ["b", "2b+2-a", "1+b"], 1.7729),
    _t("B7", "B7 v1,v2 dominated", ["b", "3b+1", "1+b"], 1.7665),
    _t("B8", "B8 y undominated", ["b", "2", "3", "3+b-a"], 1.9403),
    _t("B8", "B8 y dominated", ["b", "1+b", "2+b", "2+2b"], 1.9398),
    _t("B9", "B9 y undominated", ["b", "1+b", "2+b", "3+b-a", "3+b-d+m"], 1.9896),
    _t("B9", "B9 y dominated", ["b", "1+b", "2+b", "2+2b", "2+2b+m"], 1.9813),
) + tuple(
    _t("B10", f"B10 n1={n1} n2={n2}",
       ["b", _B10_SECOND[n1], _B10_THIRD[n2], _B10_OUT[n1], _B10_OUT[n2]],
       _B10_BOUNDS[n1, n2])
    for n1 in range(3) for n2 in range(3)
) + (
    _t("B12", "B12", ["b", "3-2b"], 1.9896),
)

MODES = ("2deg", "general")


def _catalog(mode: str) -> tuple[Template, ...]:
    if mode == "2deg":
        return TWO_DEGENERATE
    if mode == "general":
        return GENERAL
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def vectors_2degenerate(w: WeightSet) -> list[BranchingVector]:
    w.validate()
    if w.beta != 1.0:
        raise WeightError("the 2-degenerate catalog is defined for beta = 1")
    return [t.instantiate(w) for t in TWO_DEGENERATE]


def vectors_general(w: WeightSet) -> list[BranchingVector]:
    w.validate()
    return [t.instantiate(w) for t in GENERAL]


def vectors(mode: str, w: WeightSet) -> list[BranchingVector]:
    return vectors_2degenerate(w) if mode == "2deg" else vectors_general(w)


# -- per-branch claims used by the engine's runtime checks -------------------

REDUCTION_RULES = ("R1", "R2", "R3", "R5")


@lru_cache(maxsize=64)
def claimed_decreases(rule: str, w: WeightSet) -> tuple[float, ...]:
    """Smallest decrease each branch of ``rule`` is entitled to.

    For a branching rule this is the component-wise minimum over all of the
    rule's catalog rows (the 2-degenerate table when ``beta == 1``). Edge
    deletions and discarding an isolated dominated vertex claim nothing;
    forcing the only undecided neighbour into the solution claims
    ``min(beta, 1 - delta)``.
    """
    if rule in ("R1", "R2", "R3"):
        return (0.0,)
    if rule == "R5":
        return (min(w.beta, 1.0 - w.delta),)
    catalog = TWO_DEGENERATE if w.beta == 1.0 else GENERAL
    rows = [t.instantiate(w).decreases for t in catalog if t.rule == rule]
    if not rows:
        raise KeyError(f"no branching vector for rule {rule!r}")
    lengths = {len(r) for r in rows}
    if len(lengths) != 1:
        raise ValueError(f"rule {rule} rows disagree on length")
    return tuple(min(col) for col in zip(*rows))


# -- bound checks ------------------------------------------------------------


@dataclass(frozen=True)
class CheckRow:
    vector: BranchingVector
    number: float
    bound: float | None
    ok: bool
    note: str = ""

    @property
    def label(self) -> str:
        return self.vector.label


def check_catalog(mode: str, w: WeightSet, margin: float = MARGIN) -> list[CheckRow]:
    """Evaluate every row and compare it to its printed bound.

    A ``<`` bound must hold with ``margin`` to spare. An exact row must equal
    its bound within 1e-9. Rows printed without a number must not exceed the
    row they are said to be dominated by.
    """
    vecs = vectors(mode, w)
    numbers = {v.label: v.number for v in vecs}
    out = []
    for v in vecs:
        lam = numbers[v.label]
        if v.exact:
            ok, bound, note = abs(lam - v.bound) <= 1e-9, v.bound, "="
        elif v.bound is not None:
            ok, bound, note = lam <= v.bound - margin, v.bound, "<"
        else:
            bound = numbers[v.dominated_by]
            ok, note = lam <= bound, f"<= {v.dominated_by}"
        out.append(CheckRow(v, lam, bound, ok, note))
    return out


def objective_templates(mode: str) -> tuple[Template, ...]:
    """Rows that govern the running time in ``mode``. The catch-all rule
    never fires on 2-degenerate inputs, so it is left out there."""
    cat = _catalog(mode)
    if mode == "2deg":
        cat = tuple(t for t in cat if t.rule != "B12")
    return cat


def _flat(templates: Sequence[Template]):
    coef, starts = [], [0]
    for t in templates:
        coef.extend(t.rows)
        starts.append(len(coef))
    return coef, starts


def catalog_max(mode: str, w: WeightSet) -> tuple[float, str]:
    """Largest branching number among the governing rows, with its label."""
    w.validate()
    templates = objective_templates(mode)
    coef, starts = _flat(templates)
    val, idx = kernels.catalog_max(coef, starts, w.alpha, w.beta, w.delta)
    return val, templates[idx].label


# -- weight search -------------------------------------------------------------


def _grid(lo: float, hi: float, step: float) -> list[float]:
    n = int(math.floor((hi - lo) / step + 1e-9))
    return [round(lo + i * step, 10) for i in range(n + 1)]


def optimize_weights(mode: str, *, coarse: float = 0.002, final_step: float = 1e-5) -> tuple[WeightSet, float]:
    """Minimise the governing catalog maximum over the weights.

    ``2deg`` searches ``alpha`` and ``delta`` with ``beta = 1`` on a full grid
    of spacing ``coarse``. ``general`` searches all three weights, first on a
    grid ten times coarser over the whole box and then at ``coarse`` spacing
    around the best point. Both finish with a deterministic coordinate
    descent whose step halves down to ``final_step``.
    """
    templates = objective_templates(mode)
    coef, starts = _flat(templates)
    open_unit = _grid(coarse, 1.0 - coarse, coarse)
    if mode == "2deg":
        best, (a, b, d) = kernels.grid_min(coef, starts, open_unit, [1.0], open_unit)
        free = (0, 2)
    else:
        wide = 10 * coarse
        box = _grid(wide, 1.0 - wide, wide)
        _, (a0, b0, d0) = kernels.grid_min(coef, starts, box, box + [1.0], box)

        def around(c, upper):
            vals = _grid(max(coarse, c - wide), min(upper, c + wide), coarse)
            return [v for v in vals if 0 < v < 1 or (upper == 1.0 and v == 1.0)]

        best, (a, b, d) = kernels.grid_min(
            coef, starts,
            around(a0, 1.0 - coarse), around(b0, 1.0), around(d0, 1.0 - coarse),
        )
        free = (0, 1, 2)
    point = [a, b, d]

    def value(p):
        if not (0 < p[0] < 1 and 0 < p[2] < 1 and 0 < p[1] <= 1):
            return math.inf
        return kernels.catalog_max(coef, starts, p[0], p[1], p[2])[0]

    best = value(point)
    step = coarse / 2
    while step >= final_step:
        improved = True
        while improved:
            improved = False
            for k in free:
                for sgn in (1, -1):
                    trial = point[:]
                    trial[k] += sgn * step
                    v = value(trial)
                    if v < best - 1e-15:
                        best, point, improved = v, trial, True
        step /= 2
    return WeightSet(point[0], point[1], point[2]), best
