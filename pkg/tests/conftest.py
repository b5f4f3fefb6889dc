import numpy as np
import pytest

from hypan import FiniteMetricSpace, PointCloud, build_metric_from_points, gen_random_ball


def four_cycle_matrix():
    """Shortest-path matrix of the unit-edge 4-cycle: sides 1, diagonals 2."""
    return np.array([
        [0.0, 1.0, 2.0, 1.0],
        [1.0, 0.0, 1.0, 2.0],
        [2.0, 1.0, 0.0, 1.0],
        [1.0, 2.0, 1.0, 0.0],
    ])


@pytest.fixture
def four_cycle():
    return FiniteMetricSpace(4, four_cycle_matrix(), provenance="4-cycle")


@pytest.fixture
def line_space():
    """Collinear points 0, 1, 2, 3."""
    pts = np.array([[0.0], [1.0], [2.0], [3.0]])
    return build_metric_from_points(PointCloud(1, pts))


def ball_space(n, seed, dim=3):
    return build_metric_from_points(gen_random_ball(n, dim, seed))
