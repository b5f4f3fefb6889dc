"""Metric-axiom, Ptolemy-inequality, and five-point product-inequality checks."""

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .errors import FewerThanFivePoints, InvalidDistanceMatrix
from .spaces import FiniteMetricSpace

# Pairing p of an unordered quadruple (i, j, k, l) splits it into the pairs
# ({i,j},{k,l}), ({i,k},{j,l}), ({i,l},{j,k}) respectively.
PAIRINGS = ("12|34", "13|24", "14|23")

#: Division guard for the relative Ptolemy defect.
DEFECT_FLOOR = 1e-300

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class QuadrupleWitness:
    """Index tuple achieving the extremum of a scanned inequality."""

    indices: tuple
    pairing: str | None
    value: float


@dataclass(frozen=True)
class AxiomReport:
    symmetric: bool
    identity_ok: bool
    worst_triangle_violation: float
    worst_triangle_triple: tuple
    perimeter_ok: bool
    worst_perimeter_witness: QuadrupleWitness | None


@dataclass(frozen=True)
class PtolemyReport:
    max_relative_defect: float
    witness: QuadrupleWitness | None
    is_ptolemy: bool


def check_metric_axioms(space: FiniteMetricSpace, tol: float = DEFAULT_TOL) -> AxiomReport:
    """Report symmetry, identity, worst triangle violation, and the perimeter check.

    The triangle scan covers all ordered triples; the perimeter scan covers
    all unordered quadruples and pair splits (vacuously fine for n < 4).
    Never raises: this is a report, not a validator.
    """
    if tol < 0:
        raise InvalidDistanceMatrix("tol must be >= 0")
    d = space.dist
    n = space.n
    symmetric = bool(np.max(np.abs(d - d.T)) <= tol) if n else True
    offdiag = d[~np.eye(n, dtype=bool)]
    identity_ok = bool(np.all(np.diagonal(d) == 0.0)) and bool(np.all(offdiag > 0.0))

    worst_tri, triple = kernels.triangle_scan(d)

    res = kernels.perimeter_scan(d)
    if res is None:
        perimeter_ok = True
        perim_witness = None
    else:
        worst_perim, quad, pairing = res
        perimeter_ok = worst_perim <= tol
        perim_witness = QuadrupleWitness(quad, PAIRINGS[pairing], worst_perim)

    return AxiomReport(
        symmetric=symmetric,
        identity_ok=identity_ok,
        worst_triangle_violation=worst_tri,
        worst_triangle_triple=triple,
        perimeter_ok=perimeter_ok,
        worst_perimeter_witness=perim_witness,
    )


def ptolemy_defect(space: FiniteMetricSpace, tol: float = DEFAULT_TOL) -> PtolemyReport:
    """Exhaustive relative Ptolemy defect over all quadruples and pairings.

    The defect is normalized by max(right-hand side, DEFECT_FLOOR) to keep
    it scale-free. Spaces with n < 4 are vacuously Ptolemy.
    """
    res = kernels.ptolemy_scan(space.dist, DEFECT_FLOOR)
    if res is None:
        return PtolemyReport(0.0, None, True)
    defect, quad, pairing = res
    witness = QuadrupleWitness(quad, PAIRINGS[pairing], defect)
    return PtolemyReport(defect, witness, defect <= tol)


def lemma22_defect(space: FiniteMetricSpace, base: int):
    """Max defect of the five-point product inequality with the given base.

    With p_i = d(base, x_i), scans every quadruple of non-base points and
    every pair split for the worst value of
    p3*p4*d12 + p1*p2*d34 - (p1*p3*d24 + p2*p4*d13 + p2*p3*d14 + p1*p4*d23);
    a nonpositive max certifies the inequality on this space. Returns
    (value, QuadrupleWitness).
    """
    if not 0 <= base < space.n:
        raise InvalidDistanceMatrix(f"base {base} out of range for n={space.n}")
    if space.n < 5:
        raise FewerThanFivePoints(f"need at least 5 points, got {space.n}")
    value, quad, pairing = kernels.lemma22_scan(space.dist, base)
    return value, QuadrupleWitness(quad, PAIRINGS[pairing], value)
