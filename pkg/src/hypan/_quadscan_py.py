"""Pure-numpy quadruple-scan kernels.

Fallback backend used when the compiled extension (``hypan._quadscan``) is
unavailable. Every function here has a signature-compatible twin in the
extension. Reductions use the same operand order in both backends so max/min
results agree bit-for-bit; epsilon roots agree to the bisection tolerance.

Scans stream over slices of the index space instead of materializing the
full n^4 tuple set, and take their witnesses from the first occurrence of
the extremum in lexicographic index order.
"""

import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

BACKEND_NAME = "python"


def _quad_index_array(n):
    """All C(n,4) index quadruples i<j<k<l, in lexicographic order."""
    flat = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), 4)),
        dtype=np.intp,
    )
    return flat.reshape(-1, 4)


def triangle_scan(d):
    """Worst ordered-triple violation d(x,y) - d(x,z) - d(z,y) and its triple."""
    v = (d[:, :, None] - d[:, None, :]) - d.T[None, :, :]
    x, y, z = np.unravel_index(int(np.argmax(v)), v.shape)
    return float(v[x, y, z]), (int(x), int(y), int(z))


def perimeter_scan(d):
    """Worst perimeter-inequality violation over unordered quadruples.

    For each quadruple and each of the three pair splits, the violation is
    d12 + d34 - (d13 + d14 + d23 + d24). Returns (value, quadruple, pairing)
    or None when n < 4.
    """
    n = d.shape[0]
    if n < 4:
        return None
    q = _quad_index_array(n)
    i, j, k, l = q.T
    dij, dik, dil = d[i, j], d[i, k], d[i, l]
    djk, djl, dkl = d[j, k], d[j, l], d[k, l]
    v0 = (dij + dkl) - (((dik + dil) + djk) + djl)
    v1 = (dik + djl) - (((dij + dil) + djk) + dkl)
    v2 = (dil + djk) - (((dij + dik) + djl) + dkl)
    v = np.stack([v0, v1, v2], axis=1)
    flat = int(np.argmax(v))
    qi, pairing = divmod(flat, 3)
    return float(v[qi, pairing]), tuple(int(t) for t in q[qi]), pairing


def ptolemy_scan(d, floor=1e-300):
    """Max relative Ptolemy defect over unordered quadruples and pairings.

    Defect of pairing 0 is (d_ij*d_kl - d_ik*d_jl - d_il*d_jk) divided by
    max(d_ik*d_jl + d_il*d_jk, floor); the other pairings rotate the roles
    with the remaining products taken in pairing order. Returns
    (defect, quadruple, pairing) or None when n < 4.
    """
    n = d.shape[0]
    if n < 4:
        return None
    q = _quad_index_array(n)
    i, j, k, l = q.T
    p0 = d[i, j] * d[k, l]
    p1 = d[i, k] * d[j, l]
    p2 = d[i, l] * d[j, k]
    v0 = ((p0 - p1) - p2) / np.maximum(p1 + p2, floor)
    v1 = ((p1 - p0) - p2) / np.maximum(p0 + p2, floor)
    v2 = ((p2 - p0) - p1) / np.maximum(p0 + p1, floor)
    v = np.stack([v0, v1, v2], axis=1)
    flat = int(np.argmax(v))
    qi, pairing = divmod(flat, 3)
    return float(v[qi, pairing]), tuple(int(t) for t in q[qi]), pairing


def lemma22_scan(d, base):
    """Max five-point product-inequality defect for quadruples avoiding base.

    With p_x = d(base, x), the defect of the split pairing {x1,x2}|{x3,x4}
    is p3*p4*d12 + p1*p2*d34 minus the four cross products. Returns
    (value, quadruple-of-original-indices, pairing).
    """
    n = d.shape[0]
    others = np.array([t for t in range(n) if t != base], dtype=np.intp)
    q = others[_quad_index_array(others.size)]
    i, j, k, l = q.T
    p = d[base]
    pi, pj, pk, pl = p[i], p[j], p[k], p[l]
    dij, dik, dil = d[i, j], d[i, k], d[i, l]
    djk, djl, dkl = d[j, k], d[j, l], d[k, l]
    e0 = (pk * pl * dij + pi * pj * dkl) - (
        ((pi * pk * djl + pj * pl * dik) + pj * pk * dil) + pi * pl * djk
    )
    # pairing 1 assigns (x1,x2,x3,x4) = (i,k,j,l)
    e1 = (pj * pl * dik + pi * pk * djl) - (
        ((pi * pj * dkl + pk * pl * dij) + pj * pk * dil) + pi * pl * djk
    )
    # pairing 2 assigns (x1,x2,x3,x4) = (i,l,j,k)
    e2 = (pj * pk * dil + pi * pl * djk) - (
        ((pi * pj * dkl + pk * pl * dij) + pj * pl * dik) + pi * pk * djl
    )
    v = np.stack([e0, e1, e2], axis=1)
    flat = int(np.argmax(v))
    qi, pairing = divmod(flat, 3)
    return float(v[qi, pairing]), tuple(int(t) for t in q[qi]), pairing


def _delta_block(d, g, xs, threshold):
    """Scan ordered tuples with first index in xs; returns (best, witness)."""
    best = -math.inf
    wit = (0, 0, 0, 0)
    for x in xs:
        txz = g[:, x, :]                              # (o, z) -> (x|z)_o
        m = np.minimum(txz[:, :, None], g)            # (o, z, y)
        v = m - txz[:, None, :]                       # minus (x|y)_o
        vt = v.transpose(2, 1, 0)                     # (y, z, o)
        y, z, o = np.unravel_index(int(np.argmax(vt)), vt.shape)
        val = float(vt[y, z, o])
        if val > best:
            best = val
            wit = (int(x), int(y), int(z), int(o))
            if threshold is not None and best > threshold:
                break
    return best, wit


def delta_scan(d, threshold=None, workers=1):
    """Max of min((x|z)_o, (z|y)_o) - (x|y)_o over all ordered 4-tuples.

    Returns (value, witness (x,y,z,o)); witness is the lexicographically
    smallest tuple achieving the max. With a threshold, the scan may stop
    early once a tuple exceeding it has been found.
    """
    n = d.shape[0]
    g = (d[:, :, None] + d[:, None, :] - d[None, :, :]) / 2.0  # g[o,i,j] = (i|j)_o
    if workers <= 1 or n < 2 * workers:
        return _delta_block(d, g, range(n), threshold)
    bounds = np.linspace(0, n, workers + 1).astype(int)
    chunks = [range(bounds[t], bounds[t + 1]) for t in range(workers)]
    best = -math.inf
    wit = (0, 0, 0, 0)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_delta_block, d, g, c, threshold) for c in chunks]
        for fut in futures:
            val, cand = fut.result()
            if val > best:
                best, wit = val, cand
            if threshold is not None and best > threshold:
                break
    return best, wit


def delta_over_tuples(d, tuples):
    """Same reduction as delta_scan restricted to the given (m,4) tuple array."""
    if len(tuples) == 0:
        return -math.inf, (0, 0, 0, 0)
    x, y, z, o = tuples[:, 0], tuples[:, 1], tuples[:, 2], tuples[:, 3]
    gxz = (d[o, x] + d[o, z] - d[x, z]) / 2.0
    gzy = (d[o, z] + d[o, y] - d[z, y]) / 2.0
    gxy = (d[o, x] + d[o, y] - d[x, y]) / 2.0
    v = np.minimum(gxz, gzy) - gxy
    t = int(np.argmax(v))
    return float(v[t]), tuple(int(s) for s in tuples[t])


def eps_root(a, b, tol):
    """Unique e > 0 with exp(-e*a) + exp(-e*b) = 1, by bracketing + bisection.

    a, b > 0. Bracket starts at [tol, 1] and doubles the upper end until the
    sign changes; both phases are capped at 200 iterations.
    """
    lo = tol
    hi = 1.0
    if math.exp(-lo * a) + math.exp(-lo * b) - 1.0 <= 0.0:
        return lo
    it = 0
    while math.exp(-hi * a) + math.exp(-hi * b) - 1.0 > 0.0 and it < 200:
        lo = hi
        hi = hi * 2.0
        it += 1
    it = 0
    while hi - lo > tol and it < 200:
        mid = (lo + hi) * 0.5
        if math.exp(-mid * a) + math.exp(-mid * b) - 1.0 > 0.0:
            lo = mid
        else:
            hi = mid
        it += 1
    return (lo + hi) * 0.5


def _eps_root_vec(a, b, tol):
    """Vectorized eps_root; per-element identical to the scalar version."""
    lo = np.full(a.shape, tol)
    hi = np.ones(a.shape)
    below = (np.exp(-lo * a) + np.exp(-lo * b) - 1.0) <= 0.0
    for _ in range(200):
        grow = (np.exp(-hi * a) + np.exp(-hi * b) - 1.0) > 0.0
        if not grow.any():
            break
        lo = np.where(grow, hi, lo)
        hi = np.where(grow, hi * 2.0, hi)
    for _ in range(200):
        act = (hi - lo) > tol
        if not act.any():
            break
        mid = (lo + hi) * 0.5
        pos = (np.exp(-mid * a) + np.exp(-mid * b) - 1.0) > 0.0
        lo = np.where(act & pos, mid, lo)
        hi = np.where(act & ~pos, mid, hi)
    return np.where(below, tol, (lo + hi) * 0.5)


def epsilon_over_quads(d, quads, tol):
    """Per-quadruple strong-hyperbolicity thresholds for sorted index rows.

    Returns (eps array with inf for unbounded quadruples, extremal pairing
    index array).
    """
    i, j, k, l = quads[:, 0], quads[:, 1], quads[:, 2], quads[:, 3]
    s0 = (d[i, j] + d[k, l]) / 2.0
    s1 = (d[i, k] + d[j, l]) / 2.0
    s2 = (d[i, l] + d[j, k]) / 2.0
    s = np.stack([s0, s1, s2], axis=1)
    pairing = np.argmax(s, axis=1)
    m = np.max(s, axis=1)
    gaps = np.sort(m[:, None] - s, axis=1)
    a, b = gaps[:, 1], gaps[:, 2]
    eps = np.full(len(quads), np.inf)
    bounded = a > 0.0
    if bounded.any():
        eps[bounded] = _eps_root_vec(a[bounded], b[bounded], tol)
    return eps, pairing


def epsilon_scan(d, tol):
    """Infimum of per-quadruple epsilon thresholds over unordered quadruples.

    Returns (eps, quadruple, pairing); eps is inf (and the witness None)
    when every quadruple leaves the condition unbounded, e.g. n < 4.
    """
    n = d.shape[0]
    if n < 4:
        return math.inf, None, None
    quads = _quad_index_array(n)
    eps, pairing = epsilon_over_quads(d, quads, tol)
    t = int(np.argmin(eps))
    if math.isinf(eps[t]):
        return math.inf, None, None
    return float(eps[t]), tuple(int(s) for s in quads[t]), int(pairing[t])


def bolicity_scan(d, r, eta):
    """Largest d(x,z)+d(y,t) among ordered quadruples violating the bolicity slack.

    A violator has d(x,y)+d(z,t) <= r and slack
    d(x,t)+d(y,z) - d(x,z) - d(y,t) > eta. Returns (value, witness) or None
    when there is no violator.
    """
    n = d.shape[0]
    best = -math.inf
    wit = None
    for x in range(n):
        dx = d[x]
        pair_lo = dx[:, None, None] + d[None, :, :]                   # (y,z,t)
        slack = (dx[None, None, :] + d[:, :, None]) - dx[None, :, None] - d[:, None, :]
        viol = (pair_lo <= r) & (slack > eta)
        if not viol.any():
            continue
        cross = dx[None, :, None] + d[:, None, :]
        vals = np.where(viol, cross, -np.inf)
        flat = int(np.argmax(vals))
        v = float(vals.flat[flat])
        if v > best:
            y, z, t = np.unravel_index(flat, vals.shape)
            best = v
            wit = (x, int(y), int(z), int(t))
    if wit is None:
        return None
    return best, wit
