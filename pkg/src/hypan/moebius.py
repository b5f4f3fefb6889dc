"""Sphere inversion of the unit ball and the chi-metric distortion check.

The inversion sigma fixes the sphere S(a*, r) with a* = a/|a|^2 and
r = sqrt(1-|a|^2)/|a|; that sphere is orthogonal to the unit sphere, so
sigma preserves the unit ball and swaps a and 0. A Moebius self-map of the
punctured ball with f(0) = a is parameterized as sigma composed with an
orthogonal matrix.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BaseAtOrigin,
    BaseOutsideBall,
    InvalidDimension,
    NotOrthogonal,
    PointAtPuncture,
    PoleInput,
)

POLE_GUARD = 1e-14
ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class InversionParams:
    """Parameters of the inversion: center a* = a/|a|^2, radius r.

    Satisfies |a*|^2 - r^2 = 1 exactly in algebra (checked to 1e-12 here).
    """

    dim: int
    a: np.ndarray
    a_star: np.ndarray
    r: float


@dataclass(frozen=True)
class MoebiusMap:
    """f = sigma o q on the punctured unit ball; f(0) = a.

    inversion is None exactly when a = 0, in which case f is the orthogonal
    map q alone.
    """

    dim: int
    a: np.ndarray
    q: np.ndarray
    inversion: InversionParams | None

    def apply(self, x):
        y = self.q @ np.asarray(x, dtype=float)
        if self.inversion is None:
            return y
        return apply_sigma(self.inversion, y)


def make_inversion(a) -> InversionParams:
    """Inversion fixing the sphere orthogonal to the unit sphere through a."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise InvalidDimension("a must be a vector of dimension >= 2")
    na = float(np.linalg.norm(a))
    if na == 0.0:
        raise BaseAtOrigin("the inversion is undefined for a = 0")
    if na >= 1.0:
        raise BaseOutsideBall(f"|a| = {na} must be < 1")
    a_star = a / na**2
    r = math.sqrt(1.0 - na**2) / na
    params = InversionParams(a.size, a, a_star, r)
    ident = float(np.dot(a_star, a_star)) - r**2
    if abs(ident - 1.0) > 1e-12:
        raise InvalidDimension(f"|a*|^2 - r^2 = {ident}, expected 1")
    return params


def apply_sigma(inv: InversionParams, x):
    """sigma(x) = a* + (r / |x - a*|)^2 (x - a*); involution, sigma(a) = 0."""
    x = np.asarray(x, dtype=float)
    v = x - inv.a_star
    nv = float(np.linalg.norm(v))
    if nv < POLE_GUARD:
        raise PoleInput("input too close to the inversion pole a*")
    return inv.a_star + (inv.r / nv) ** 2 * v


def sigma_distance_identity(inv: InversionParams, x, y) -> float:
    """Relative discrepancy of |sigma(x)-sigma(y)| = r^2 |x-y| / (|x-a*| |y-a*|)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    sx = apply_sigma(inv, x)
    sy = apply_sigma(inv, y)
    lhs = float(np.linalg.norm(sx - sy))
    px = float(np.linalg.norm(x - inv.a_star))
    py = float(np.linalg.norm(y - inv.a_star))
    rhs = inv.r**2 * float(np.linalg.norm(x - y))
    return abs(lhs * px * py - rhs) / max(rhs, 1e-300)


def random_orthogonal(dim: int, seed: int) -> np.ndarray:
    """Haar-ish orthogonal matrix from a seeded Gaussian QR, deterministic."""
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(m)
    return q * np.sign(np.diagonal(r))


def make_moebius(a, q=None, seed: int = 0) -> MoebiusMap:
    """Moebius self-map of the punctured ball with f(0) = a.

    q may be an explicit orthogonal matrix or omitted to draw a seeded
    random one. a = 0 yields the purely orthogonal map.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise InvalidDimension("a must be a vector of dimension >= 2")
    dim = a.size
    if q is None:
        q = random_orthogonal(dim, seed)
    else:
        q = np.asarray(q, dtype=float)
        if q.shape != (dim, dim):
            raise NotOrthogonal(f"q must be {dim}x{dim}")
        if float(np.max(np.abs(q.T @ q - np.eye(dim)))) > ORTHO_TOL:
            raise NotOrthogonal("q is not orthogonal within tolerance")
    na = float(np.linalg.norm(a))
    if na == 0.0:
        return MoebiusMap(dim, a, q, None)
    return MoebiusMap(dim, a, q, make_inversion(a))


@dataclass(frozen=True)
class DistortionReport:
    pair_count: int
    max_lower_violation: float
    max_upper_violation: float
    max_identity_violation: float
    bound_constant: float
    witnesses: tuple


def _chi(u, v, center):
    du = float(np.linalg.norm(u - center))
    dv = float(np.linalg.norm(v - center))
    return math.log1p(float(np.linalg.norm(u - v)) / (du * dv))


def distortion_check(mmap: MoebiusMap, pairs, tol: float = 1e-10) -> DistortionReport:
    """Verify chi_0(x,y) <= chi_a(f(x),f(y)) <= chi_0(x,y) - ln(1-|a|^2) on pairs.

    Also tracks the exact middle identity
    chi_a(f(x),f(y)) = ln(1 + |x-y| / ((1-|a|^2) |x||y|)).
    Violations are signed overshoots of each bound; values <= tol certify
    the two-sided estimate on this sample.
    """
    a = mmap.a
    na2 = float(np.dot(a, a))
    bound = -math.log1p(-na2)
    origin = np.zeros(mmap.dim)
    max_lower = -math.inf
    max_upper = -math.inf
    max_ident = 0.0
    wit_lower = None
    wit_upper = None
    count = 0
    for x, y in pairs:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if np.linalg.norm(x) < POLE_GUARD or np.linalg.norm(y) < POLE_GUARD:
            raise PointAtPuncture("pair point at the origin puncture")
        fx = mmap.apply(x)
        fy = mmap.apply(y)
        if np.linalg.norm(fx - a) < POLE_GUARD or np.linalg.norm(fy - a) < POLE_GUARD:
            raise PointAtPuncture("image point at the target puncture")
        chi0 = _chi(x, y, origin)
        chia = _chi(fx, fy, a)
        lower = chi0 - chia
        upper = chia - (chi0 + bound)
        t = float(np.linalg.norm(x - y)) / (
            float(np.linalg.norm(x)) * float(np.linalg.norm(y))
        )
        ident = abs(chia - math.log1p(t / (1.0 - na2)))
        if lower > max_lower:
            max_lower = lower
            wit_lower = (x.tolist(), y.tolist(), lower)
        if upper > max_upper:
            max_upper = upper
            wit_upper = (x.tolist(), y.tolist(), upper)
        max_ident = max(max_ident, ident)
        count += 1
    witnesses = tuple(w for w in (wit_lower, wit_upper) if w is not None)
    return DistortionReport(
        pair_count=count,
        max_lower_violation=max_lower if count else 0.0,
        max_upper_violation=max_upper if count else 0.0,
        max_identity_violation=max_ident,
        bound_constant=bound,
        witnesses=witnesses,
    )
