"""Point clouds, finite metric spaces, and seeded test-space generators."""

from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicatePoint, InvalidDimension, InvalidDistanceMatrix


@dataclass
class PointCloud:
    """Labeled points in R^dim, stored as an (n, dim) float array."""

    dim: int
    points: np.ndarray
    labels: list | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidDimension("dim must be a positive integer")
        self.points = np.asarray(self.points, dtype=float)
        if self.points.ndim != 2 or self.points.shape[1] != self.dim:
            raise InvalidDimension(
                f"points must be an (n, {self.dim}) array, got shape {self.points.shape}"
            )
        if self.labels is not None:
            if len(self.labels) != len(self.points):
                raise InvalidDimension("labels must match the number of points")
            if len(set(self.labels)) != len(self.labels):
                raise InvalidDimension("labels must be unique")

    def __len__(self):
        return len(self.points)


@dataclass
class FiniteMetricSpace:
    """Symmetric nonnegative distance matrix with optional puncture record.

    The triangle inequality is *not* assumed at construction; it is verified
    by check_metric_axioms. excluded_base records the original index of a
    removed base point when the space arose from a punctured transform.
    """

    n: int
    dist: np.ndarray
    excluded_base: int | None = None
    provenance: str = ""

    def __post_init__(self):
        self.dist = np.ascontiguousarray(self.dist, dtype=float)
        if self.dist.ndim != 2 or self.dist.shape != (self.n, self.n):
            raise InvalidDistanceMatrix(
                f"dist must be ({self.n}, {self.n}), got {self.dist.shape}"
            )
        if self.n < 1:
            raise InvalidDistanceMatrix("a metric space needs at least one point")
        if not np.all(np.isfinite(self.dist)):
            raise InvalidDistanceMatrix("distances must be finite")
        if np.any(np.diagonal(self.dist) != 0.0):
            raise InvalidDistanceMatrix("diagonal must be exactly zero")
        if not np.array_equal(self.dist, self.dist.T):
            raise InvalidDistanceMatrix("distance matrix must be symmetric")
        off = self.dist[~np.eye(self.n, dtype=bool)]
        if off.size and np.any(off <= 0.0):
            raise InvalidDistanceMatrix("off-diagonal distances must be positive")

    @classmethod
    def from_matrix(cls, dist, excluded_base=None, provenance=""):
        dist = np.asarray(dist, dtype=float)
        return cls(dist.shape[0], dist, excluded_base, provenance)

    def scaled(self, lam):
        """The same point set with every distance multiplied by lam > 0."""
        if lam <= 0:
            raise InvalidDistanceMatrix("scale factor must be positive")
        return FiniteMetricSpace(
            self.n, self.dist * lam, self.excluded_base,
            f"scale({lam})({self.provenance})",
        )


def build_metric_from_points(cloud: PointCloud) -> FiniteMetricSpace:
    """Euclidean distance matrix of a point cloud."""
    p = cloud.points
    diff = p[:, None, :] - p[None, :, :]
    dist = np.sqrt((diff * diff).sum(axis=-1))
    n = len(p)
    dup = np.argwhere((dist == 0.0) & ~np.eye(n, dtype=bool))
    if dup.size:
        i, j = dup[0]
        raise DuplicatePoint(int(min(i, j)), int(max(i, j)))
    return FiniteMetricSpace(n, dist, provenance="euclidean")


def gen_random_ball(count: int, dim: int, seed: int) -> PointCloud:
    """Points sampled uniformly in the open unit ball, deterministic in seed.

    Collisions (probability zero, but possible with adversarial seeds on
    tiny counts) are resampled.
    """
    if count < 1:
        raise InvalidDimension("count must be >= 1")
    if dim < 1:
        raise InvalidDimension("dim must be >= 1")
    rng = np.random.default_rng(seed)

    def sample(k):
        dirs = rng.standard_normal((k, dim))
        norms = np.linalg.norm(dirs, axis=1, keepdims=True)
        norms[norms == 0.0] = 1.0
        radii = rng.random(k) ** (1.0 / dim)
        return dirs / norms * radii[:, None]

    pts = sample(count)
    for _ in range(100):
        dd = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
        clash = np.argwhere((dd == 0.0) & ~np.eye(count, dtype=bool))
        if not clash.size:
            break
        redo = np.unique(clash[:, 0])
        pts[redo] = sample(len(redo))
    return PointCloud(dim, pts)


def gen_tree_metric(count: int, seed: int) -> FiniteMetricSpace:
    """Shortest-path metric of a random tree with edge weights in [0.5, 2].

    Node i >= 1 attaches to a uniformly random earlier node, so distances
    can be accumulated incrementally; deterministic in seed.
    """
    if count < 1:
        raise InvalidDimension("count must be >= 1")
    rng = np.random.default_rng(seed)
    dist = np.zeros((count, count))
    for i in range(1, count):
        parent = int(rng.integers(0, i))
        w = rng.uniform(0.5, 2.0)
        dist[i, :i] = dist[parent, :i] + w
        dist[:i, i] = dist[i, :i]
    return FiniteMetricSpace(count, dist, provenance="tree")
