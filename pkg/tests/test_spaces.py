import math

import numpy as np
import pytest

from hypan import (
    FiniteMetricSpace,
    PointCloud,
    build_metric_from_points,
    delta_hyperbolicity,
    gen_random_ball,
    gen_tree_metric,
)
from hypan.errors import DuplicatePoint, InvalidDimension, InvalidDistanceMatrix

from _oracles import tree_four_point_ok


def test_line_distances():
    cloud = PointCloud(1, np.array([[0.0], [1.0], [3.0]]))
    s = build_metric_from_points(cloud)
    assert np.array_equal(s.dist, np.array([[0, 1, 3], [1, 0, 2], [3, 2, 0]], dtype=float))
    assert s.provenance == "euclidean"


def test_single_point():
    s = build_metric_from_points(PointCloud(2, np.array([[0.5, 0.5]])))
    assert s.n == 1
    assert s.dist.shape == (1, 1)
    assert s.dist[0, 0] == 0.0


def test_unit_square_diagonals():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    s = build_metric_from_points(PointCloud(2, pts))
    assert s.dist[0, 1] == pytest.approx(1.0, abs=0)
    assert s.dist[0, 2] == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert s.dist[1, 3] == pytest.approx(math.sqrt(2.0), abs=1e-15)


def test_duplicate_points_rejected():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]])
    with pytest.raises(DuplicatePoint) as exc:
        build_metric_from_points(PointCloud(2, pts))
    assert exc.value.indices == (0, 2)


def test_cloud_validation():
    with pytest.raises(InvalidDimension):
        PointCloud(2, np.array([[0.0, 0.0, 0.0]]))
    with pytest.raises(InvalidDimension):
        PointCloud(2, np.zeros((2, 2)), labels=["a"])
    with pytest.raises(InvalidDimension):
        PointCloud(2, np.array([[0.0, 0.0], [1.0, 1.0]]), labels=["a", "a"])


def test_matrix_validation():
    with pytest.raises(InvalidDistanceMatrix):
        FiniteMetricSpace(2, np.array([[0.0, 1.0], [2.0, 0.0]]))  # asymmetric
    with pytest.raises(InvalidDistanceMatrix):
        FiniteMetricSpace(2, np.array([[0.1, 1.0], [1.0, 0.0]]))  # nonzero diag
    with pytest.raises(InvalidDistanceMatrix):
        FiniteMetricSpace(2, np.array([[0.0, 0.0], [0.0, 0.0]]))  # zero off-diag


def test_ball_determinism_and_norms():
    a = gen_random_ball(40, 3, 42)
    b = gen_random_ball(40, 3, 42)
    assert np.array_equal(a.points, b.points)
    norms = np.linalg.norm(a.points, axis=1)
    assert np.all(norms < 1.0)
    # all points distinct
    d = build_metric_from_points(a).dist
    assert np.all(d[~np.eye(40, dtype=bool)] > 0)


def test_ball_single_point():
    c = gen_random_ball(1, 3, 7)
    assert len(c) == 1
    assert np.linalg.norm(c.points[0]) < 1.0


def test_tree_two_points():
    s = gen_tree_metric(2, 5)
    assert s.n == 2
    assert 0.5 <= s.dist[0, 1] <= 2.0


def test_star_metric_leaves():
    # star with 4 unit edges: center 0, leaves pairwise at distance 2
    d = np.full((5, 5), 2.0)
    d[0, :] = d[:, 0] = 1.0
    np.fill_diagonal(d, 0.0)
    s = FiniteMetricSpace(5, d)
    delta, _ = delta_hyperbolicity(s)
    assert delta == 0.0


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_tree_four_point_condition(seed):
    s = gen_tree_metric(9, seed)
    assert tree_four_point_ok(s.dist, tol=1e-12)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_tree_is_zero_hyperbolic(seed):
    s = gen_tree_metric(12, seed)
    delta, _ = delta_hyperbolicity(s)
    assert delta <= 1e-12


def test_scaled():
    s = gen_tree_metric(6, 0)
    t = s.scaled(3.0)
    assert np.allclose(t.dist, 3.0 * s.dist)
    with pytest.raises(InvalidDistanceMatrix):
        s.scaled(0.0)
