"""A few seconds' worth of self-checks behind ``cdsenum verify``.

This is a smoke test for an installed copy, not the test suite: small
instances of each headline claim, each reported as (name, ok, detail).
"""
from __future__ import annotations

import random

from .analysis import GENERAL_WEIGHTS, TABLE_WEIGHTS, catalog_max, check_catalog
from .engine import minimal_cds
from .generators import (
    gen_base_gt, gen_gtk, gen_hs_split, gen_random_degenerate, gen_sat_gadget,
    gt_count, random_3cnf, random_hypergraph,
)
from .graph import degeneracy, is_bipartite, to_mask
from .oracle import enumerate_bruteforce, extension_exists, minimal_hitting_sets


def _oracle_equivalence():
    bad = 0
    for seed in range(60):
        g = gen_random_degenerate(8 + seed % 4, 1 + seed % 4, seed)
        if minimal_cds(g) != enumerate_bruteforce(g):
            bad += 1
    return bad == 0, f"60 random graphs, {bad} mismatches"


def _lower_bounds():
    got = []
    for t in (2, 3):
        g = gen_base_gt(t, clique_x=True)
        x = to_mask(range(t))
        got.append(sum(1 for s in minimal_cds(g) if to_mask(s) & x) == gt_count(t))
    for t in (2, 3):
        g, _ = gen_gtk(t, 2)
        got.append(len(minimal_cds(g)) == gt_count(t) ** 2)
    return all(got), "base graph t=2,3 and composed k=2"


def _gadgets():
    rng = random.Random(11)
    ok = True
    for _ in range(10):
        f = random_3cnf(rng.randint(1, 3), rng.randint(1, 4), rng)
        g, u = gen_sat_gadget(f)
        ok &= degeneracy(g).degeneracy <= 2
        ok &= g.n == 5 * f.nvars + 3 * len(f.clauses) + 1
        ok &= extension_exists(g, u) == f.satisfiable()
    g, _ = gen_gtk(3, 2)
    ok &= is_bipartite(g) and degeneracy(g).degeneracy <= 3
    return ok, "10 formulas, sizes, degeneracy, SAT agreement"


def _split():
    rng = random.Random(5)
    ok = True
    checked = 0
    while checked < 20:
        ground = rng.randint(1, 5)
        sets = random_hypergraph(ground, rng.randint(1, 4), rng)
        if len(sets) == 1 and len(sets[0]) == ground:
            continue  # the set vertex is universal there
        g, _ = gen_hs_split(ground, sets)
        ok &= minimal_cds(g) == minimal_hitting_sets(ground, sets)[0]
        checked += 1
    return ok, "20 random hypergraphs"


def _analysis():
    a = all(r.ok for r in check_catalog("2deg", TABLE_WEIGHTS))
    b = all(r.ok for r in check_catalog("general", GENERAL_WEIGHTS))
    m1, _ = catalog_max("2deg", TABLE_WEIGHTS)
    m2, _ = catalog_max("general", GENERAL_WEIGHTS)
    return a and b and m1 < 1.9767 and m2 < 1.9896, f"max {m1:.6f} / {m2:.6f}"


CHECKS = (
    ("oracle-equivalence", _oracle_equivalence),
    ("lower-bound-counts", _lower_bounds),
    ("extension-gadget", _gadgets),
    ("split-graph", _split),
    ("branching-vectors", _analysis),
)


def run_checks():
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, don't crash the whole run
            ok, detail = False, f"error: {exc!r}"
        out.append((name, bool(ok), detail))
    return out
