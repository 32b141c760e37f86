# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_kernels_py`` exactly; see there for the
contracts."""
from libc.math cimport pow, INFINITY
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 30
    MAXVEC = 16

cdef double BISECT_WIDTH = 1e-12


cdef inline uint64_t _closed(uint64_t mask, const uint64_t* adj) noexcept nogil:
    cdef uint64_t out = mask, f = mask
    while f:
        out |= adj[__builtin_ctzll(f)]
        f &= f - 1
    return out


cdef inline bint _connected(uint64_t mask, const uint64_t* adj) noexcept nogil:
    cdef uint64_t reach = mask & (~mask + 1)
    cdef uint64_t frontier = reach, grow, f
    while frontier:
        grow = 0
        f = frontier
        while f:
            grow |= adj[__builtin_ctzll(f)]
            f &= f - 1
        grow &= mask & ~reach
        reach |= grow
        frontier = grow
    return reach == mask


def minimal_cds_masks(adj, int n):
    if n > MAXN:
        raise ValueError(f"n={n} exceeds compiled limit {MAXN}")
    cdef uint64_t a[MAXN]
    cdef int i
    for i in range(n):
        a[i] = <uint64_t>adj[i]
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t mask, f, low, sub
    cdef bint minimal
    out = []
    mask = 1
    while mask <= full:
        if _closed(mask, a) == full and _connected(mask, a):
            minimal = True
            f = mask
            while f:
                low = f & (~f + 1)
                f ^= low
                sub = mask ^ low
                if sub and _closed(sub, a) == full and _connected(sub, a):
                    minimal = False
                    break
            if minimal:
                out.append(mask)
        mask += 1
    return out


def minimal_hitting_masks(set_masks, int ground):
    if ground > MAXN:
        raise ValueError(f"ground={ground} exceeds compiled limit {MAXN}")
    cdef Py_ssize_t m = len(set_masks), j
    cdef uint64_t* s = <uint64_t*>malloc((m + 1) * sizeof(uint64_t))
    for j in range(m):
        s[j] = <uint64_t>set_masks[j]
    cdef uint64_t h, f, low, limit = (<uint64_t>1) << ground
    cdef bint ok, private
    out = []
    try:
        h = 0
        while h < limit:
            ok = True
            for j in range(m):
                if not (h & s[j]):
                    ok = False
                    break
            if ok:
                f = h
                while f:
                    low = f & (~f + 1)
                    f ^= low
                    private = False
                    for j in range(m):
                        if (h & s[j]) == low:
                            private = True
                            break
                    if not private:
                        ok = False
                        break
                if ok:
                    out.append(h)
            h += 1
    finally:
        free(s)
    return out


cdef double _bn(const double* r, int t) noexcept nogil:
    cdef double lo = 1.0, hi, mid, acc, rmin = r[0]
    cdef int i
    for i in range(1, t):
        if r[i] < rmin:
            rmin = r[i]
    hi = pow(<double>t, 1.0 / rmin)
    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        acc = 0.0
        for i in range(t):
            acc += pow(mid, -r[i])
        if acc > 1.0:
            lo = mid
        else:
            hi = mid
    return hi


def branching_number(r):
    cdef int t = len(r), i
    if t == 0:
        raise ValueError("empty branching vector")
    cdef double* buf = <double*>malloc(t * sizeof(double))
    try:
        for i in range(t):
            buf[i] = float(r[i])
            if buf[i] <= 0:
                raise ValueError(f"nonpositive component in {list(r)}")
        if t == 1:
            return 1.0
        return _bn(buf, t)
    finally:
        free(buf)


cdef struct Catalog:
    int nvec
    int* starts
    double* coef   # 5 doubles per component


cdef int _load(Catalog* cat, coef, starts) except -1:
    cdef int nrow = len(coef), k, c
    cat.nvec = len(starts) - 1
    cat.starts = <int*>malloc(len(starts) * sizeof(int))
    cat.coef = <double*>malloc(5 * nrow * sizeof(double) + 8)
    for k in range(len(starts)):
        cat.starts[k] = starts[k]
        if k > 0 and cat.starts[k] - cat.starts[k - 1] > MAXVEC:
            raise ValueError("vector too long")
    for k in range(nrow):
        for c in range(5):
            cat.coef[5 * k + c] = coef[k][c]
    return 0


cdef void _free(Catalog* cat) noexcept:
    free(cat.starts)
    free(cat.coef)


cdef double _eval(const Catalog* cat, double a, double b, double d,
                  double cutoff, int* arg) noexcept nogil:
    cdef double r[MAXVEC]
    cdef double best = 0.0, lam, acc, mb = b if b < 1.0 - a else 1.0 - a
    cdef int i, k, t
    cdef const double* c
    arg[0] = -1
    for i in range(cat.nvec):
        t = cat.starts[i + 1] - cat.starts[i]
        for k in range(t):
            c = cat.coef + 5 * (cat.starts[i] + k)
            r[k] = c[0] + c[1] * a + c[2] * b + c[3] * d + c[4] * mb
            if r[k] <= 0:
                arg[0] = i
                return INFINITY
        if cutoff < INFINITY:
            acc = 0.0
            for k in range(t):
                acc += pow(cutoff, -r[k])
            if acc > 1.0:
                arg[0] = i
                return INFINITY
        if t == 1:
            continue
        lam = _bn(r, t)
        if lam > best:
            best = lam
            arg[0] = i
    return best


def catalog_max(coef, starts, double a, double b, double d, double cutoff=INFINITY):
    cdef Catalog cat
    cdef int arg
    cdef double val
    _load(&cat, coef, starts)
    try:
        val = _eval(&cat, a, b, d, cutoff, &arg)
    finally:
        _free(&cat)
    return val, arg


def grid_min(coef, starts, avals, bvals, dvals):
    cdef Catalog cat
    cdef int arg, ia, ib, id_
    cdef int na = len(avals), nb = len(bvals), nd = len(dvals)
    cdef double best = INFINITY, val, pa = float("nan"), pb = pa, pd = pa
    cdef double* av = <double*>malloc((na + nb + nd + 1) * sizeof(double))
    cdef double* bv = av + na
    cdef double* dv = bv + nb
    for ia in range(na):
        av[ia] = avals[ia]
    for ib in range(nb):
        bv[ib] = bvals[ib]
    for id_ in range(nd):
        dv[id_] = dvals[id_]
    _load(&cat, coef, starts)
    try:
        with nogil:
            for ia in range(na):
                for ib in range(nb):
                    for id_ in range(nd):
                        val = _eval(&cat, av[ia], bv[ib], dv[id_], best, &arg)
                        if val < best:
                            best = val
                            pa = av[ia]
                            pb = bv[ib]
                            pd = dv[id_]
    finally:
        _free(&cat)
        free(av)
    return best, (pa, pb, pd)
