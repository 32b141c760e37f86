"""Pure-Python kernels. Same signatures and results as the compiled
``_ckernels`` module; used when the extension is not built."""
from __future__ import annotations

import math

BISECT_WIDTH = 1e-12


def _connected(mask, adj):
    reach = mask & -mask
    frontier = reach
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= adj[low.bit_length() - 1]
            f ^= low
        grow &= mask & ~reach
        reach |= grow
        frontier = grow
    return reach == mask


def _closed(mask, adj):
    out = mask
    f = mask
    while f:
        low = f & -f
        out |= adj[low.bit_length() - 1]
        f ^= low
    return out


def minimal_cds_masks(adj, n):
    """All inclusion-minimal connected dominating sets, as bitmasks in
    ascending numeric order."""
    full = (1 << n) - 1
    adj = list(adj)
    out = []
    for mask in range(1, full + 1):
        if _closed(mask, adj) != full or not _connected(mask, adj):
            continue
        minimal = True
        f = mask
        while f:
            low = f & -f
            f ^= low
            sub = mask ^ low
            if sub and _closed(sub, adj) == full and _connected(sub, adj):
                minimal = False
                break
        if minimal:
            out.append(mask)
    return out


def minimal_hitting_masks(set_masks, ground):
    """All inclusion-minimal hitting sets of the hypergraph, ascending."""
    set_masks = list(set_masks)
    out = []
    for h in range(1 << ground):
        if any(not (h & s) for s in set_masks):
            continue
        # minimal iff every member has a private hyperedge
        minimal = True
        f = h
        while f:
            low = f & -f
            f ^= low
            if not any((h & s) == low for s in set_masks):
                minimal = False
                break
        if minimal:
            out.append(h)
    return out


def branching_number(r):
    r = [float(x) for x in r]
    if not r:
        raise ValueError("empty branching vector")
    if min(r) <= 0:
        raise ValueError(f"nonpositive component in {r}")
    if len(r) == 1:
        return 1.0
    lo = 1.0
    hi = len(r) ** (1.0 / min(r))
    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket no longer representable at this magnitude
        if sum(mid ** -x for x in r) > 1.0:
            lo = mid
        else:
            hi = mid
    return hi


def _instantiate(row, a, b, d):
    c0, ca, cb, cd, cm = row
    return c0 + ca * a + cb * b + cd * d + cm * min(b, 1.0 - a)


def catalog_max(coef, starts, a, b, d, cutoff=math.inf):
    """Max branching number over a catalog at weights (a, b, d).

    ``coef`` is a flat list of 5-tuples (const, alpha, beta, delta,
    min(beta, 1-alpha)) and vector ``i`` spans ``coef[starts[i]:starts[i+1]]``.
    Returns ``(value, index)``. If some vector's number exceeds ``cutoff``
    the scan stops early and returns ``(inf, index)``.
    """
    best = 0.0
    arg = -1
    nvec = len(starts) - 1
    for i in range(nvec):
        r = [_instantiate(coef[k], a, b, d) for k in range(starts[i], starts[i + 1])]
        if min(r) <= 0:
            return math.inf, i
        if cutoff < math.inf and sum(cutoff ** -x for x in r) > 1.0:
            return math.inf, i
        if len(r) == 1:
            continue
        lam = branching_number(r)
        if lam > best:
            best, arg = lam, i
    return best, arg


def grid_min(coef, starts, avals, bvals, dvals):
    """Exhaustive grid minimisation of ``catalog_max``. Ties keep the first
    point in (alpha, beta, delta) lexicographic order."""
    best = math.inf
    point = (math.nan, math.nan, math.nan)
    for a in avals:
        for b in bvals:
            for d in dvals:
                val, _ = catalog_max(coef, starts, a, b, d, best)
                if val < best:
                    best = val
                    point = (a, b, d)
    return best, point
