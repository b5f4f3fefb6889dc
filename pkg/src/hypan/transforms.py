"""Metric transforms: log-metric, s_p, S_p, chi_p, tau_p, and h_{D,c}.

All logarithms are natural. Entrywise maps preserve symmetry and the zero
diagonal by construction. The base-punctured transforms (chi_p, tau_p)
return a space on the n-1 remaining points, in the original order, with the
puncture recorded in excluded_base.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimension, PointOnBoundary, ZeroBaseDistance
from .spaces import FiniteMetricSpace, PointCloud, build_metric_from_points

TRANSFORM_KINDS = ("log", "sp", "Sp", "chi", "tau", "hdc")

BASED_KINDS = ("sp", "Sp", "chi", "tau")


@dataclass(frozen=True)
class TransformSpec:
    kind: str
    base: int | None = None
    c: float = 2.0

    def __post_init__(self):
        if self.kind not in TRANSFORM_KINDS:
            raise InvalidDimension(f"unknown transform kind {self.kind!r}")
        if self.kind in BASED_KINDS and self.base is None:
            raise InvalidDimension(f"transform {self.kind!r} requires a base index")
        if self.kind not in BASED_KINDS and self.base is not None:
            raise InvalidDimension(f"transform {self.kind!r} takes no base index")
        if self.kind == "hdc" and self.c < 2.0:
            warnings.warn(
                f"h_D,c with c={self.c} < 2 is not guaranteed to be a metric",
                stacklevel=2,
            )


@dataclass
class BoundarySet:
    """Finite sample of a domain boundary in R^dim."""

    dim: int
    boundary_points: np.ndarray

    def __post_init__(self):
        self.boundary_points = np.asarray(self.boundary_points, dtype=float)
        if self.boundary_points.ndim != 2 or self.boundary_points.shape[1] != self.dim:
            raise InvalidDimension(
                f"boundary points must be (m, {self.dim}), got {self.boundary_points.shape}"
            )
        if len(self.boundary_points) == 0:
            raise InvalidDimension("boundary sample must be nonempty")


def log_metric(space: FiniteMetricSpace) -> FiniteMetricSpace:
    """d -> ln(1 + d)."""
    return FiniteMetricSpace(
        space.n, np.log1p(space.dist), space.excluded_base,
        f"log({space.provenance})",
    )


def sp_metric(space: FiniteMetricSpace, base: int) -> FiniteMetricSpace:
    """d(x,y) -> d(x,y) / ((1 + d(x,p)) (1 + d(y,p))), defined on all of X."""
    _check_base(space, base)
    q = 1.0 + space.dist[base]
    out = space.dist / np.outer(q, q)
    return FiniteMetricSpace(
        space.n, out, space.excluded_base,
        f"sp(base={base})({space.provenance})",
    )


def cap_sp_metric(space: FiniteMetricSpace, base: int) -> FiniteMetricSpace:
    """ln(1 + s_p): exactly the composition of log_metric after sp_metric."""
    out = log_metric(sp_metric(space, base))
    out.provenance = f"Sp(base={base})({space.provenance})"
    return out


def chi_metric(space: FiniteMetricSpace, base: int) -> FiniteMetricSpace:
    """d(x,y) -> ln(1 + d(x,y) / (d(p,x) d(p,y))) on the points other than p."""
    sub, p, keep = _punctured(space, base)
    out = np.log1p(sub / np.outer(p, p))
    np.fill_diagonal(out, 0.0)
    return FiniteMetricSpace(
        space.n - 1, out, excluded_base=base,
        provenance=f"chi(base={base})({space.provenance})",
    )


def tau_metric(space: FiniteMetricSpace, base: int) -> FiniteMetricSpace:
    """d(x,y) -> ln(1 + 2 d(x,y) / (sqrt(d(p,x)) sqrt(d(p,y)))) off the base."""
    sub, p, keep = _punctured(space, base)
    sq = np.sqrt(p)
    out = np.log1p(2.0 * sub / np.outer(sq, sq))
    np.fill_diagonal(out, 0.0)
    return FiniteMetricSpace(
        space.n - 1, out, excluded_base=base,
        provenance=f"tau(base={base})({space.provenance})",
    )


def hdc_metric(cloud: PointCloud, boundary: BoundarySet, c: float = 2.0) -> FiniteMetricSpace:
    """d(x,y) -> ln(1 + c |x-y| / (sqrt(d_D(x)) sqrt(d_D(y)))) for interior points.

    d_D is the distance to the finite boundary sample; c >= 2 guarantees a
    metric, smaller c is permitted but flagged by TransformSpec.
    """
    if c <= 0:
        raise InvalidDimension("c must be positive")
    if cloud.dim != boundary.dim:
        raise InvalidDimension("cloud and boundary dimensions differ")
    gaps = np.linalg.norm(
        cloud.points[:, None, :] - boundary.boundary_points[None, :, :], axis=-1
    )
    d_b = gaps.min(axis=1)
    if np.any(d_b == 0.0):
        idx = int(np.argwhere(d_b == 0.0)[0, 0])
        raise PointOnBoundary(f"point {idx} lies on the sampled boundary")
    eucl = build_metric_from_points(cloud)
    sq = np.sqrt(d_b)
    out = np.log1p(c * eucl.dist / np.outer(sq, sq))
    np.fill_diagonal(out, 0.0)
    flag = "" if c >= 2.0 else ",c<2"
    return FiniteMetricSpace(
        len(cloud), out, provenance=f"hdc(c={c}{flag})(euclidean)",
    )


def apply_transform(spec: TransformSpec, space=None, cloud=None, boundary=None):
    """Dispatch a TransformSpec; hdc needs cloud+boundary, the rest a space."""
    if spec.kind == "hdc":
        if cloud is None or boundary is None:
            raise InvalidDimension("hdc requires a point cloud and a boundary sample")
        return hdc_metric(cloud, boundary, spec.c)
    if space is None:
        raise InvalidDimension(f"transform {spec.kind!r} requires a metric space")
    if spec.kind == "log":
        return log_metric(space)
    if spec.kind == "sp":
        return sp_metric(space, spec.base)
    if spec.kind == "Sp":
        return cap_sp_metric(space, spec.base)
    if spec.kind == "chi":
        return chi_metric(space, spec.base)
    return tau_metric(space, spec.base)


def _check_base(space, base):
    if not 0 <= base < space.n:
        raise InvalidDimension(f"base {base} out of range for n={space.n}")


def _punctured(space, base):
    _check_base(space, base)
    if space.n < 2:
        raise InvalidDimension("punctured transforms need at least 2 points")
    keep = np.array([t for t in range(space.n) if t != base])
    p = space.dist[base, keep]
    if np.any(p == 0.0):
        raise ZeroBaseDistance("some point coincides with the base")
    sub = space.dist[np.ix_(keep, keep)]
    return sub, p, keep
