import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from harnacklab.domains import ExteriorPointError, HalfSpace, SlitPlane, UnitBall
from harnacklab.metrics import (
    j_metric,
    k_lower_bound_log1p,
    k_lower_bound_logratio,
    rho_ball,
    rho_halfspace,
)

ball_points = st.tuples(st.floats(-0.7, 0.7), st.floats(-0.7, 0.7)).filter(
    lambda p: math.hypot(*p) < 0.95)
hs_points = st.tuples(st.floats(-3.0, 3.0), st.floats(0.05, 4.0))


class TestRhoBall:
    def test_identity(self):
        assert rho_ball([0.0, 0.0], [0.0, 0.0]) == 0.0

    def test_radial_value(self):
        # 2 artanh(0.5) = log 3, and the sh^2 identity gives the same number
        val = rho_ball([0.0, 0.0], [0.5, 0.0])
        assert val == pytest.approx(math.log(3.0), abs=1e-14)
        sh2 = math.sinh(val / 2) ** 2
        assert sh2 == pytest.approx(0.25 / (1.0 * 0.75), rel=1e-12)

    def test_symmetry(self):
        assert rho_ball([0.3, 0.0], [0.0, 0.3]) == rho_ball([0.0, 0.3], [0.3, 0.0])

    def test_exterior(self):
        with pytest.raises(ExteriorPointError):
            rho_ball([1.0, 0.0], [0.0, 0.0])

    @given(ball_points, ball_points, ball_points)
    @settings(max_examples=150, deadline=None)
    def test_triangle_inequality(self, a, b, c):
        assert rho_ball(a, c) <= rho_ball(a, b) + rho_ball(b, c) + 1e-9


class TestRhoHalfspace:
    def test_vertical_segment(self):
        # oracle: integral of dt/t from 1 to e is exactly 1
        assert rho_halfspace([0.0, 1.0], [0.0, math.e]) == pytest.approx(1.0, abs=1e-14)

    def test_identity(self):
        assert rho_halfspace([2.0, 1.0], [2.0, 1.0]) == 0.0

    def test_arccosh_form(self):
        val = rho_halfspace([0.0, 1.0], [1.0, 1.0])
        assert val == pytest.approx(math.acosh(1.5), abs=1e-14)
        # direct evaluation of the ch identity
        assert math.cosh(val) == pytest.approx(1.0 + 1.0 / 2.0, rel=1e-12)

    def test_exterior(self):
        with pytest.raises(ExteriorPointError):
            rho_halfspace([0.0, 0.0], [0.0, 1.0])

    @given(hs_points, hs_points, hs_points)
    @settings(max_examples=150, deadline=None)
    def test_triangle_inequality(self, a, b, c):
        assert rho_halfspace(a, c) <= rho_halfspace(a, b) + rho_halfspace(b, c) + 1e-9


class TestJMetric:
    def test_ball_value(self):
        assert j_metric(UnitBall(2), [0, 0], [0.5, 0]) == pytest.approx(math.log(2), abs=1e-14)

    def test_zero_at_identity(self):
        assert j_metric(UnitBall(2), [0.3, 0.1], [0.3, 0.1]) == 0.0

    def test_symmetric(self):
        dom = SlitPlane()
        a, b = [-1.0, 0.5], [-0.2, -0.7]
        assert j_metric(dom, a, b) == j_metric(dom, b, a)

    @given(ball_points, ball_points, ball_points)
    @settings(max_examples=150, deadline=None)
    def test_triangle_inequality(self, a, b, c):
        dom = UnitBall(2)
        assert j_metric(dom, a, c) <= j_metric(dom, a, b) + j_metric(dom, b, c) + 1e-9


class TestComparisons:
    def test_j_rho_double_inequality_ball(self):
        dom = UnitBall(2)
        pts = dom.sample_interior(2000, seed=3, margin=0.01)
        for i in range(1000):
            x, y = pts[2 * i], pts[2 * i + 1]
            j = j_metric(dom, x, y)
            rho = rho_ball(x, y)
            assert j <= rho + 1e-12
            assert rho <= 2 * j + 1e-12

    def test_j_rho_double_inequality_halfspace(self):
        dom = HalfSpace(2, sampling_box=([-4, 0], [4, 8]))
        pts = dom.sample_interior(2000, seed=4, margin=0.01)
        for i in range(1000):
            x, y = pts[2 * i], pts[2 * i + 1]
            j = j_metric(dom, x, y)
            rho = rho_halfspace(x, y)
            assert j <= rho + 1e-12
            assert rho <= 2 * j + 1e-12

    def test_lower_bounds_values(self):
        dom = UnitBall(2)
        assert k_lower_bound_logratio(dom, [0, 0], [0.5, 0]) == pytest.approx(
            math.log(2), abs=1e-14)
        assert k_lower_bound_log1p(dom, [0, 0], [0.5, 0]) == pytest.approx(
            math.log(1.5), abs=1e-14)

    def test_logratio_zero_for_equal_distances(self):
        dom = UnitBall(2)
        assert k_lower_bound_logratio(dom, [0.5, 0], [0, 0.5]) == pytest.approx(0.0, abs=1e-14)

    def test_log1p_not_symmetric(self):
        dom = UnitBall(2)
        a, b = [0.0, 0.0], [0.8, 0.0]
        assert k_lower_bound_log1p(dom, a, b) != pytest.approx(
            k_lower_bound_log1p(dom, b, a), abs=1e-6)

    def test_log1p_zero_at_identity(self):
        assert k_lower_bound_log1p(UnitBall(2), [0.2, 0.2], [0.2, 0.2]) == 0.0
