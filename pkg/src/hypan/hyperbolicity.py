"""Gromov products, hyperbolicity constants, and bolicity witnesses.

delta_hyperbolicity maximizes the four-point deficiency of Definition-style
Gromov products over all ordered tuples (repeats allowed; they only achieve
zero). strong_epsilon minimizes the per-quadruple threshold of the
exponential four-point condition over distinct unordered quadruples, since
tuples with repeated points have two equal pairing sums and never bind.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .backend import kernels, py_kernels
from .checks import PAIRINGS, QuadrupleWitness
from .errors import InvalidDistanceMatrix, NonFiniteInput
from .spaces import FiniteMetricSpace

LN2 = math.log(2.0)

DEFAULT_ROOT_TOL = 1e-12
DEFAULT_SAMPLE_COUNT = 200_000


class _Unbounded:
    """Sentinel: the four-point condition holds for every epsilon."""

    __slots__ = ()

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


@dataclass(frozen=True)
class ScanMode:
    kind: str  # "exhaustive" or "sampled"
    count: int = DEFAULT_SAMPLE_COUNT
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown scan mode {self.kind!r}")
        if self.count < 1:
            raise ValueError("sample count must be >= 1")


EXHAUSTIVE = ScanMode("exhaustive")


def sampled(count: int = DEFAULT_SAMPLE_COUNT, seed: int = 0) -> ScanMode:
    return ScanMode("sampled", count, seed)


@dataclass(frozen=True)
class HyperbolicityReport:
    delta_star: float
    delta_witness: QuadrupleWitness
    epsilon_star: object  # float or UNBOUNDED
    epsilon_witness: QuadrupleWitness | None
    mode: ScanMode
    consistency_ok: bool


@dataclass(frozen=True)
class BolicityResult:
    r: float
    eta: float
    r_min: float
    vacuous: bool
    witness: QuadrupleWitness | None


def gromov_product(space: FiniteMetricSpace, x: int, y: int, o: int) -> float:
    """(x|y)_o = (d(o,x) + d(o,y) - d(x,y)) / 2; nonnegative for metrics."""
    d = space.dist
    return (d[o, x] + d[o, y] - d[x, y]) / 2.0


def quadruple_epsilon(s1: float, s2: float, s3: float, tol: float = DEFAULT_ROOT_TOL):
    """Largest epsilon for which one quadruple satisfies the four-point condition.

    s1, s2, s3 are the three half-pairing sums. With m the largest and a, b
    the gaps to the other two, the condition exp(eps*m) <= exp(eps*s') +
    exp(eps*s'') holds iff exp(-eps*a) + exp(-eps*b) >= 1. Returns UNBOUNDED
    when the top two sums tie (a gap is zero), else the root of
    exp(-eps*a) + exp(-eps*b) = 1 to absolute tolerance tol.
    """
    if not (math.isfinite(s1) and math.isfinite(s2) and math.isfinite(s3)):
        raise NonFiniteInput(f"pairing sums must be finite, got {(s1, s2, s3)}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = max(s1, s2, s3)
    gaps = sorted((m - s1, m - s2, m - s3))
    a, b = gaps[1], gaps[2]
    if a == 0.0:
        return UNBOUNDED
    return py_kernels.eps_root(a, b, tol)


def delta_hyperbolicity(space: FiniteMetricSpace, mode: ScanMode = EXHAUSTIVE,
                        threshold: float | None = None):
    """Exact (or sampled lower-bound) hyperbolicity constant with witness.

    Exhaustive mode streams over all n^4 ordered tuples; sampled mode
    evaluates count seeded uniform tuples and is a lower bound. A threshold
    allows early bailout once any tuple exceeds it.
    """
    d = space.dist
    if mode.kind == "exhaustive":
        value, wit = kernels.delta_scan(d, threshold, backend.worker_count())
    else:
        rng = np.random.default_rng(mode.seed)
        tuples = rng.integers(0, space.n, size=(mode.count, 4))
        value, wit = py_kernels.delta_over_tuples(d, tuples)
    value = max(value, 0.0)
    return value, QuadrupleWitness(wit, None, value)


def strong_epsilon(space: FiniteMetricSpace, mode: ScanMode = EXHAUSTIVE,
                   tol: float = DEFAULT_ROOT_TOL):
    """Maximal strong-hyperbolicity parameter (infimum over quadruples).

    Returns (epsilon_star, witness). epsilon_star is UNBOUNDED when every
    quadruple leaves the condition unbounded (always the case for n < 4).
    Sampled mode minimizes over a seeded subset of quadruples, which is an
    optimistic (upper-bound) estimate.
    """
    d = space.dist
    if mode.kind == "exhaustive":
        eps, quad, pairing = kernels.epsilon_scan(d, tol)
    else:
        rng = np.random.default_rng(mode.seed)
        raw = rng.integers(0, space.n, size=(mode.count, 4))
        distinct = raw[(raw[:, 0] != raw[:, 1]) & (raw[:, 0] != raw[:, 2])
                       & (raw[:, 0] != raw[:, 3]) & (raw[:, 1] != raw[:, 2])
                       & (raw[:, 1] != raw[:, 3]) & (raw[:, 2] != raw[:, 3])]
        if len(distinct) == 0:
            return UNBOUNDED, None
        quads = np.sort(distinct, axis=1)
        epses, pairings = py_kernels.epsilon_over_quads(d, quads, tol)
        t = int(np.argmin(epses))
        eps = float(epses[t])
        quad = tuple(int(s) for s in quads[t])
        pairing = int(pairings[t])
    if math.isinf(eps):
        return UNBOUNDED, None
    return eps, QuadrupleWitness(quad, PAIRINGS[pairing], eps)


def bolicity_r_min(space: FiniteMetricSpace, r: float, eta: float) -> BolicityResult:
    """Smallest R excluding every bolicity violator on this space.

    Scans ordered quadruples with d(x,y)+d(z,t) <= r whose pairing slack
    d(x,t)+d(y,z) - d(x,z) - d(y,t) exceeds eta; r_min is one ulp above the
    largest d(x,z)+d(y,t) among them, or zero (vacuous) when none exist.
    """
    if r <= 0 or eta <= 0:
        raise InvalidDistanceMatrix("r and eta must be positive")
    res = kernels.bolicity_scan(space.dist, r, eta)
    if res is None:
        return BolicityResult(r, eta, 0.0, True, None)
    value, wit = res
    r_min = float(np.nextafter(value, np.inf))
    return BolicityResult(r, eta, r_min, False, QuadrupleWitness(wit, None, value))


def analyze(space: FiniteMetricSpace, mode: ScanMode = EXHAUSTIVE,
            tol: float = 1e-9) -> HyperbolicityReport:
    """delta*, epsilon*, and the cross-check delta* <= ln2/epsilon* + tol."""
    delta, delta_wit = delta_hyperbolicity(space, mode)
    eps, eps_wit = strong_epsilon(space, mode, DEFAULT_ROOT_TOL)
    if eps is UNBOUNDED:
        consistent = True
    else:
        consistent = delta <= LN2 / eps + tol
    return HyperbolicityReport(delta, delta_wit, eps, eps_wit, mode, consistent)
