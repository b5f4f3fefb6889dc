# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadruple-scan kernels.

Twin of hypan._quadscan_py: same signatures, same operand order in every
reduction, so the two backends agree bit-for-bit on max/min results and to
the bisection tolerance on epsilon roots.
"""

from libc.math cimport exp, log, INFINITY

import numpy as np

BACKEND_NAME = "cython"


def triangle_scan(double[:, ::1] d):
    """Worst ordered-triple violation d(x,y) - d(x,z) - d(z,y) and its triple."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t x, y, z, wx = 0, wy = 0, wz = 0
    cdef double best = -INFINITY, v
    for x in range(n):
        for y in range(n):
            for z in range(n):
                v = (d[x, y] - d[x, z]) - d[z, y]
                if v > best:
                    best = v
                    wx, wy, wz = x, y, z
    return best, (wx, wy, wz)


def perimeter_scan(double[:, ::1] d):
    """Worst perimeter-inequality violation over unordered quadruples."""
    cdef Py_ssize_t n = d.shape[0]
    if n < 4:
        return None
    cdef Py_ssize_t i, j, k, l, p
    cdef Py_ssize_t wi = 0, wj = 0, wk = 0, wl = 0, wp = 0
    cdef double best = -INFINITY
    cdef double dij, dik, dil, djk, djl, dkl
    cdef double v[3]
    for i in range(n - 3):
        for j in range(i + 1, n - 2):
            for k in range(j + 1, n - 1):
                for l in range(k + 1, n):
                    dij = d[i, j]; dik = d[i, k]; dil = d[i, l]
                    djk = d[j, k]; djl = d[j, l]; dkl = d[k, l]
                    v[0] = (dij + dkl) - (((dik + dil) + djk) + djl)
                    v[1] = (dik + djl) - (((dij + dil) + djk) + dkl)
                    v[2] = (dil + djk) - (((dij + dik) + djl) + dkl)
                    for p in range(3):
                        if v[p] > best:
                            best = v[p]
                            wi, wj, wk, wl, wp = i, j, k, l, p
    return best, (wi, wj, wk, wl), wp


def ptolemy_scan(double[:, ::1] d, double floor=1e-300):
    """Max relative Ptolemy defect over unordered quadruples and pairings."""
    cdef Py_ssize_t n = d.shape[0]
    if n < 4:
        return None
    cdef Py_ssize_t i, j, k, l, p
    cdef Py_ssize_t wi = 0, wj = 0, wk = 0, wl = 0, wp = 0
    cdef double best = -INFINITY
    cdef double p0, p1, p2, den
    cdef double v[3]
    for i in range(n - 3):
        for j in range(i + 1, n - 2):
            for k in range(j + 1, n - 1):
                for l in range(k + 1, n):
                    p0 = d[i, j] * d[k, l]
                    p1 = d[i, k] * d[j, l]
                    p2 = d[i, l] * d[j, k]
                    den = p1 + p2
                    if den < floor:
                        den = floor
                    v[0] = ((p0 - p1) - p2) / den
                    den = p0 + p2
                    if den < floor:
                        den = floor
                    v[1] = ((p1 - p0) - p2) / den
                    den = p0 + p1
                    if den < floor:
                        den = floor
                    v[2] = ((p2 - p0) - p1) / den
                    for p in range(3):
                        if v[p] > best:
                            best = v[p]
                            wi, wj, wk, wl, wp = i, j, k, l, p
    return best, (wi, wj, wk, wl), wp


def lemma22_scan(double[:, ::1] d, Py_ssize_t base):
    """Max five-point product-inequality defect for quadruples avoiding base."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t m = n - 1
    others_arr = np.array([t for t in range(n) if t != base], dtype=np.intp)
    cdef Py_ssize_t[::1] others = others_arr
    cdef Py_ssize_t a, b, c, e, i, j, k, l, p
    cdef Py_ssize_t wi = 0, wj = 0, wk = 0, wl = 0, wp = 0
    cdef double best = -INFINITY
    cdef double pi, pj, pk, pl, dij, dik, dil, djk, djl, dkl
    cdef double v[3]
    for a in range(m - 3):
        i = others[a]
        pi = d[base, i]
        for b in range(a + 1, m - 2):
            j = others[b]
            pj = d[base, j]
            dij = d[i, j]
            for c in range(b + 1, m - 1):
                k = others[c]
                pk = d[base, k]
                dik = d[i, k]; djk = d[j, k]
                for e in range(c + 1, m):
                    l = others[e]
                    pl = d[base, l]
                    dil = d[i, l]; djl = d[j, l]; dkl = d[k, l]
                    v[0] = (pk * pl * dij + pi * pj * dkl) - (
                        ((pi * pk * djl + pj * pl * dik) + pj * pk * dil) + pi * pl * djk)
                    v[1] = (pj * pl * dik + pi * pk * djl) - (
                        ((pi * pj * dkl + pk * pl * dij) + pj * pk * dil) + pi * pl * djk)
                    v[2] = (pj * pk * dil + pi * pl * djk) - (
                        ((pi * pj * dkl + pk * pl * dij) + pj * pl * dik) + pi * pk * djl)
                    for p in range(3):
                        if v[p] > best:
                            best = v[p]
                            wi, wj, wk, wl, wp = i, j, k, l, p
    return best, (wi, wj, wk, wl), wp


def delta_scan(double[:, ::1] d, threshold=None, workers=1):
    """Max of min((x|z)_o, (z|y)_o) - (x|y)_o over all ordered 4-tuples.

    The workers argument is accepted for signature parity and ignored; the
    compiled scan is single-threaded.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t x, y, z, o
    cdef Py_ssize_t wx = 0, wy = 0, wz = 0, wo = 0
    cdef double best = -INFINITY
    cdef double gxz, gzy, gxy, v
    cdef bint has_thr = threshold is not None
    cdef double thr = 0.0
    if has_thr:
        thr = threshold
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for o in range(n):
                    gxz = (d[o, x] + d[o, z] - d[x, z]) / 2.0
                    gzy = (d[o, z] + d[o, y] - d[z, y]) / 2.0
                    gxy = (d[o, x] + d[o, y] - d[x, y]) / 2.0
                    v = gxz if gxz < gzy else gzy
                    v = v - gxy
                    if v > best:
                        best = v
                        wx, wy, wz, wo = x, y, z, o
                        if has_thr and best > thr:
                            return best, (wx, wy, wz, wo)
    return best, (wx, wy, wz, wo)


cdef double _eps_root_c(double a, double b, double tol):
    # Unique e > 0 with exp(-e*a) + exp(-e*b) = 1; bracket [tol, 1] doubled
    # until sign change, then bisection; both phases capped at 200 iterations.
    cdef double lo = tol
    cdef double hi = 1.0
    cdef double mid
    cdef int it = 0
    if exp(-lo * a) + exp(-lo * b) - 1.0 <= 0.0:
        return lo
    while exp(-hi * a) + exp(-hi * b) - 1.0 > 0.0 and it < 200:
        lo = hi
        hi = hi * 2.0
        it += 1
    it = 0
    while hi - lo > tol and it < 200:
        mid = (lo + hi) * 0.5
        if exp(-mid * a) + exp(-mid * b) - 1.0 > 0.0:
            lo = mid
        else:
            hi = mid
        it += 1
    return (lo + hi) * 0.5


def epsilon_scan(double[:, ::1] d, double tol):
    """Infimum of per-quadruple epsilon thresholds over unordered quadruples."""
    cdef Py_ssize_t n = d.shape[0]
    if n < 4:
        return INFINITY, None, None
    cdef double ln2 = log(2.0)
    cdef Py_ssize_t i, j, k, l
    cdef Py_ssize_t wi = 0, wj = 0, wk = 0, wl = 0, wp = 0
    cdef double best = INFINITY
    cdef double s0, s1, s2, m, g0, g1, g2, a, b, t, root
    cdef Py_ssize_t p
    for i in range(n - 3):
        for j in range(i + 1, n - 2):
            for k in range(j + 1, n - 1):
                for l in range(k + 1, n):
                    s0 = (d[i, j] + d[k, l]) / 2.0
                    s1 = (d[i, k] + d[j, l]) / 2.0
                    s2 = (d[i, l] + d[j, k]) / 2.0
                    m = s0
                    p = 0
                    if s1 > m:
                        m = s1
                        p = 1
                    if s2 > m:
                        m = s2
                        p = 2
                    g0 = m - s0
                    g1 = m - s1
                    g2 = m - s2
                    # sort the three gaps; a = middle, b = largest
                    if g0 > g1:
                        t = g0; g0 = g1; g1 = t
                    if g1 > g2:
                        t = g1; g1 = g2; g2 = t
                    if g0 > g1:
                        t = g0; g0 = g1; g1 = t
                    a = g1
                    b = g2
                    if a == 0.0:
                        continue
                    # root >= ln2 / max(a, b): skip when it cannot improve
                    if best != INFINITY and ln2 / b >= best:
                        continue
                    root = _eps_root_c(a, b, tol)
                    if root < best:
                        best = root
                        wi, wj, wk, wl, wp = i, j, k, l, p
    if best == INFINITY:
        return INFINITY, None, None
    return best, (wi, wj, wk, wl), wp


def bolicity_scan(double[:, ::1] d, double r, double eta):
    """Largest d(x,z)+d(y,t) among ordered quadruples violating the bolicity slack."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t x, y, z, t
    cdef Py_ssize_t wx = 0, wy = 0, wz = 0, wt = 0
    cdef double best = -INFINITY
    cdef double slack, cross
    cdef bint found = False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for t in range(n):
                    if d[x, y] + d[z, t] > r:
                        continue
                    slack = (d[x, t] + d[y, z]) - d[x, z] - d[y, t]
                    if slack <= eta:
                        continue
                    cross = d[x, z] + d[y, t]
                    if cross > best:
                        best = cross
                        wx, wy, wz, wt = x, y, z, t
                        found = True
    if not found:
        return None
    return best, (wx, wy, wz, wt)
