import math

import numpy as np
import pytest

from hypan import (
    apply_sigma,
    distortion_check,
    make_inversion,
    make_moebius,
    random_orthogonal,
    sigma_distance_identity,
)
from hypan.cli import sample_ball_pairs
from hypan.errors import (
    BaseAtOrigin,
    BaseOutsideBall,
    InvalidDimension,
    NotOrthogonal,
    PointAtPuncture,
    PoleInput,
)


def test_make_inversion_values():
    inv = make_inversion([0.5, 0.0, 0.0])
    assert np.allclose(inv.a_star, [2.0, 0.0, 0.0], atol=1e-15)
    assert inv.r == pytest.approx(math.sqrt(3.0), abs=1e-15)

    inv2 = make_inversion(np.array([0.6, 0.8]) * 0.5)
    assert inv2.r == pytest.approx(math.sqrt(3.0), abs=1e-14)
    assert np.linalg.norm(inv2.a_star) == pytest.approx(2.0, abs=1e-14)


def test_inversion_identity_invariant():
    rng = np.random.default_rng(0)
    for _ in range(50):
        a = rng.uniform(-0.6, 0.6, size=3)
        if not 0 < np.linalg.norm(a) < 1:
            continue
        inv = make_inversion(a)
        assert abs(np.dot(inv.a_star, inv.a_star) - inv.r**2 - 1.0) <= 1e-12


def test_inversion_radius_limit():
    r_in = make_inversion([0.999, 0.0])
    assert r_in.r < 0.05  # sphere shrinks toward the boundary point


def test_make_inversion_errors():
    with pytest.raises(BaseAtOrigin):
        make_inversion([0.0, 0.0])
    with pytest.raises(BaseOutsideBall):
        make_inversion([1.0, 0.0])
    with pytest.raises(InvalidDimension):
        make_inversion([0.5])


def test_sigma_swaps_a_and_origin():
    a = np.array([0.5, 0.0, 0.0])
    inv = make_inversion(a)
    assert np.allclose(apply_sigma(inv, a), np.zeros(3), atol=1e-14)
    assert np.allclose(apply_sigma(inv, np.zeros(3)), a, atol=1e-14)


def test_sigma_is_involution():
    inv = make_inversion([0.3, -0.2, 0.4])
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(1000):
        x = rng.uniform(-0.57, 0.57, size=3)
        worst = max(worst, float(np.linalg.norm(apply_sigma(inv, apply_sigma(inv, x)) - x)))
    assert worst <= 1e-11


def test_sigma_preserves_unit_sphere():
    inv = make_inversion([0.4, 0.1, -0.3])
    rng = np.random.default_rng(6)
    for _ in range(500):
        u = rng.standard_normal(3)
        u /= np.linalg.norm(u)
        assert abs(np.linalg.norm(apply_sigma(inv, u)) - 1.0) <= 1e-11


def test_sigma_pole_guard():
    inv = make_inversion([0.5, 0.0])
    with pytest.raises(PoleInput):
        apply_sigma(inv, inv.a_star)


def test_distance_identity():
    inv = make_inversion([0.5, 0.0, 0.0])
    rng = np.random.default_rng(7)
    for _ in range(300):
        x, y = rng.uniform(-0.57, 0.57, size=(2, 3))
        assert sigma_distance_identity(inv, x, y) <= 1e-12
    # stressed conditioning near the pole (outside the ball)
    for _ in range(100):
        x = inv.a_star + rng.uniform(-1e-3, 1e-3, size=3)
        y = rng.uniform(-0.57, 0.57, size=3)
        assert sigma_distance_identity(inv, x, y) <= 1e-10


def test_make_moebius_maps_zero_to_a_and_ball_to_ball():
    a = np.array([0.5, 0.0, 0.0])
    mmap = make_moebius(a, q=np.eye(3))
    assert np.allclose(mmap.apply(np.zeros(3)), a, atol=1e-14)
    assert np.allclose(mmap.apply(a), np.zeros(3), atol=1e-14)
    rng = np.random.default_rng(8)
    count = 0
    while count < 500:
        x = rng.uniform(-1, 1, size=3)
        if np.linalg.norm(x) >= 1:
            continue
        count += 1
        assert np.linalg.norm(mmap.apply(x)) < 1.0


def test_make_moebius_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        make_moebius([0.5, 0.0], q=np.array([[1.0, 0.5], [0.0, 1.0]]))


def test_random_orthogonal_deterministic_orthogonal():
    q1 = random_orthogonal(4, 9)
    q2 = random_orthogonal(4, 9)
    assert np.array_equal(q1, q2)
    assert np.max(np.abs(q1.T @ q1 - np.eye(4))) <= 1e-12


@pytest.mark.parametrize("mag", [0.1, 0.3, 0.5, 0.7, 0.9])
@pytest.mark.parametrize("reflect", [False, True])
def test_distortion_bounds(mag, reflect):
    a = np.array([mag, 0.0, 0.0])
    q = random_orthogonal(3, 21)
    if reflect != (np.linalg.det(q) < 0):
        q = q.copy()
        q[0] *= -1.0
    mmap = make_moebius(a, q=q)
    pairs = sample_ball_pairs(3, 200, seed=13)
    rep = distortion_check(mmap, pairs)
    assert rep.bound_constant == pytest.approx(-math.log(1 - mag**2), abs=1e-15)
    assert rep.max_lower_violation <= 1e-10
    assert rep.max_upper_violation <= 1e-10
    assert rep.max_identity_violation <= 1e-10
    assert rep.pair_count == 200


def test_distortion_orthogonal_case_exact():
    mmap = make_moebius(np.zeros(3), q=random_orthogonal(3, 2))
    rep = distortion_check(mmap, sample_ball_pairs(3, 200, seed=3))
    assert rep.bound_constant == 0.0
    assert rep.max_lower_violation <= 1e-12
    assert rep.max_upper_violation <= 1e-12


def test_distortion_gap_monotone_in_ratio():
    a = np.array([0.4, 0.0, 0.0])
    mmap = make_moebius(a, q=np.eye(3))
    pairs = sample_ball_pairs(3, 300, seed=17)
    rows = []
    for x, y in pairs:
        t = np.linalg.norm(x - y) / (np.linalg.norm(x) * np.linalg.norm(y))
        chi0 = math.log1p(t)
        fx, fy = mmap.apply(x), mmap.apply(y)
        chia = math.log1p(
            np.linalg.norm(fx - fy) / (np.linalg.norm(fx - a) * np.linalg.norm(fy - a))
        )
        rows.append((t, chia - chi0))
    rows.sort()
    gaps = [g for _, g in rows]
    # gap above the lower bound grows with the ratio; gap below the upper bound shrinks
    assert all(b >= a - 1e-12 for a, b in zip(gaps, gaps[1:]))


def test_distortion_puncture_guard():
    mmap = make_moebius(np.array([0.5, 0.0, 0.0]), q=np.eye(3))
    with pytest.raises(PointAtPuncture):
        distortion_check(mmap, [(np.zeros(3), np.array([0.1, 0.0, 0.0]))])
