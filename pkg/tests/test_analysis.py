import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar

from emptyply import DomainError
from emptyply.analysis import (
    BETA1_DEG,
    d_plus_cover,
    fn_recurrence,
    fn_sequence,
    k2m_analysis,
    k8_region,
    k8_region_constraints,
    k8_region_diameter,
    k25_bounds,
    shrink_grid_max,
    shrink_limit,
)


def test_k25_at_the_24_leaf_angle():
    b = k25_bounds(2 * math.pi / 13)
    assert 2.79 <= b.lower <= 2.81 and 4.26 <= b.upper <= 4.28
    assert b.lower < 3 and b.upper > 3 * math.sqrt(2)
    assert not b.feasible


def test_k25_hand_values():
    b = k25_bounds(0.0)
    assert (b.lower, b.upper) == pytest.approx((2.0, 6.0))
    wide = k25_bounds(math.pi / 4)
    assert wide.discriminant < 0 and wide.feasible and wide.lower is None


@given(st.floats(0, 2 * math.pi / 13 * 0.999), st.floats(1e-7, 1e-5))
def test_k25_roots_solve_the_quadratic_and_vary_continuously(alpha, h):
    a, b = k25_bounds(alpha), k25_bounds(alpha + h)
    for root in (a.lower, a.upper):
        q = root / 3
        assert 0.75 * q * q - 2 * q * math.cos(alpha) + 1 == pytest.approx(0, abs=1e-9)
    assert abs(a.lower - b.lower) < 1e-2 and abs(a.upper - b.upper) < 1e-2


def test_k25_domain():
    with pytest.raises(DomainError):
        k25_bounds(math.pi / 2)


def test_shrink_limit_at_half():
    # (1/2 - (1/8)/(3/4)) * sqrt(5/4) - 1/2 by hand
    expected = (0.5 - 1 / 6) * math.sqrt(1.25) - 0.5
    s = shrink_limit(0.5)
    assert s.f == pytest.approx(expected, abs=1e-15)
    assert s.f == pytest.approx(-0.127322, abs=1e-6)
    assert s.dist_v1_w + s.dist_v3_w == pytest.approx(0.5 * math.sqrt(1.25))


def test_shrink_negative_everywhere():
    q, f = shrink_grid_max()
    assert f < 0
    f_cont = lambda x: shrink_limit(x).f  # noqa: E731
    best = minimize_scalar(lambda x: -f_cont(x), bounds=(1e-6, 1 - 1e-6), method="bounded")
    assert -best.fun < 0
    assert abs(best.x - q) < 1e-3 and f <= -best.fun + 1e-9


def test_shrink_domain():
    for q in (0, 1, -0.5):
        with pytest.raises(DomainError):
            shrink_limit(q)


@pytest.mark.parametrize(
    "p, label",
    [((1, 1.2), "A+"), ((1, -1.2), "A-"), ((0.6, 1.0), "B+"), ((1.4, 1.0), "C+"),
     ((1, 0.5), "D+"), ((1, 0), "D+"), ((5, 5), "outside"), ((0.1, 0), "outside")],
)
def test_k8_region_labels(p, label):
    assert str(k8_region(p)) == label


@given(st.floats(-3, 5), st.floats(1e-6, 3))
def test_k8_regions_mirror(x, y):
    up, down = k8_region((x, y)), k8_region((x, -y))
    assert up.letter == down.letter
    if not up.outside:
        assert (up.sign, down.sign) == ("+", "-")


@given(st.floats(-3, 5), st.floats(-3, 3))
def test_k8_regions_swap_with_the_edge_ends(x, y):
    a, b = k8_region((x, y)).letter, k8_region((2 - x, y)).letter
    swap = {"B": "C", "C": "B"}
    assert b == swap.get(a, a)


def _grid_diameter(name, step=2e-3):
    cons = k8_region_constraints(name)
    xs, ys = np.meshgrid(np.arange(-2, 4, step), np.arange(-2, 2, step))
    pts = np.stack([xs.ravel(), ys.ravel()], axis=1)
    keep = np.ones(len(pts), dtype=bool)
    for c in cons:
        keep &= c.contains(pts, 0.0)
    pts = pts[keep]
    from scipy.spatial import ConvexHull

    hull = pts[ConvexHull(pts).vertices]
    return float(np.sqrt(((hull[:, None] - hull[None]) ** 2).sum(-1)).max())


@pytest.mark.parametrize("name, value", [("B+", 0.75), ("A+_4", 0.50), ("B+_1", 0.54)])
def test_region_diameters(name, value):
    d = k8_region_diameter(name)
    assert d == pytest.approx(value, abs=0.01)
    # a grid only sees interior points, so it can only fall short
    g = _grid_diameter(name)
    assert g <= d + 1e-9 and d - g < 0.01


def test_region_names():
    with pytest.raises(DomainError):
        k8_region_constraints("E+")


def test_d_plus_cover():
    disk, ratio = d_plus_cover()
    assert disk.center == pytest.approx((1, 1 / 3), abs=1e-12)
    assert disk.radius == pytest.approx(2 / 3, abs=1e-12)
    assert ratio <= 1 + 1e-9


def test_fn_recurrence():
    seq = fn_sequence(200)
    assert seq[0] == math.sqrt(3)
    # strictly increasing until it reaches 2 in double precision
    steps = np.diff(seq)
    assert (steps >= 0).all() and (steps[:40] > 0).all()
    assert seq.max() <= 2
    assert abs(fn_recurrence(200) - 2) < 1e-6
    with pytest.raises(DomainError):
        fn_sequence(0)


def test_k2m_sectors():
    s = k2m_analysis()
    # law of cosines with sides sqrt(2), 2 and opposite side 1
    assert s.alpha_d_deg == pytest.approx(math.degrees(math.acos(5 / (4 * math.sqrt(2)))))
    assert s.alpha_d_deg == pytest.approx(27.89, abs=0.01)
    assert s.beta2_deg == pytest.approx(151.04, abs=0.01)
    assert s.beta1_deg == pytest.approx(BETA1_DEG)
    assert abs(math.degrees(math.acos(0.75)) - BETA1_DEG) < 0.01
    assert (s.outer_capacity, s.inner_capacity, s.naive_bound, s.combined_bound) == (10, 6, 16, 14)
