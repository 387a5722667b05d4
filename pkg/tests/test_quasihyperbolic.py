import math

import numpy as np
import pytest

from harnacklab.domains import (
    ExteriorPointError,
    HalfSpace,
    PuncturedPlane,
    SlitPlane,
    UnitBall,
)
from harnacklab.metrics import (
    GeodesicPath,
    PathNotFoundError,
    j_metric,
    k_lower_bound_log1p,
    k_lower_bound_logratio,
    quasihyperbolic,
    rho_ball,
    rho_halfspace,
    uniformity_ratio,
)


def halfspace2():
    return HalfSpace(2, sampling_box=([-4.0, 0.0], [4.0, 8.0]))


class TestHalfspaceAgainstClosedForm:
    def test_unit_pair(self):
        dom = halfspace2()
        val, path = quasihyperbolic(dom, [0.0, 1.0], [1.0, 1.0])
        truth = math.acosh(1.5)
        assert abs(val - truth) / truth < 0.01
        assert isinstance(path, GeodesicPath)
        assert path.length == val

    def test_seeded_pairs_within_one_percent(self):
        dom = halfspace2()
        pts = dom.sample_interior(20, seed=42, margin=0.05)
        for i in range(10):
            x, y = pts[2 * i], pts[2 * i + 1]
            truth = rho_halfspace(x, y)
            val, _ = quasihyperbolic(dom, x, y)
            assert abs(val - truth) / truth < 0.01

    def test_error_shrinks_with_resolution(self):
        dom = halfspace2()
        pts = dom.sample_interior(two := 12, seed=9, margin=0.05)
        errs = {}
        for res in (16, 32, 64):
            tot = 0.0
            for i in range(two // 2):
                x, y = pts[2 * i], pts[2 * i + 1]
                truth = rho_halfspace(x, y)
                val, _ = quasihyperbolic(dom, x, y, resolution=res)
                tot += abs(val - truth) / truth
            errs[res] = tot / (two // 2)
        assert errs[32] <= 0.75 * errs[16] + 1e-7
        assert errs[64] <= 0.75 * errs[32] + 1e-7


class TestBall:
    def test_radial_matches_log_integral(self):
        # oracle: integral of dr/(1-r) from 0 to 1/2 equals log 2
        val, _ = quasihyperbolic(UnitBall(2), [0.0, 0.0], [0.5, 0.0])
        assert abs(val - math.log(2.0)) / math.log(2.0) < 0.01

    def test_bracketed_by_rho(self):
        dom = UnitBall(2)
        pts = dom.sample_interior(16, seed=21, margin=0.05)
        for i in range(8):
            x, y = pts[2 * i], pts[2 * i + 1]
            rho = rho_ball(x, y)
            val, _ = quasihyperbolic(dom, x, y, resolution=64)
            # solver overestimates k, and k <= rho <= 2k
            assert rho <= 2.0 * val + 1e-9
            assert val <= rho * 1.01 + 1e-9

    def test_coincident_points(self):
        val, path = quasihyperbolic(UnitBall(2), [0.2, 0.1], [0.2, 0.1])
        assert val == 0.0
        assert len(path.vertices) == 1


class TestLowerBounds:
    @pytest.mark.parametrize("factory,seed", [
        (lambda: UnitBall(2), 1),
        (halfspace2, 2),
        (lambda: SlitPlane(sampling_box=([-3, -3], [3, 3])), 3),
    ])
    def test_bounds_below_numerical_k(self, factory, seed):
        dom = factory()
        pts = dom.sample_interior(40, seed=seed, margin=0.05)
        for i in range(20):
            x, y = pts[2 * i], pts[2 * i + 1]
            val, _ = quasihyperbolic(dom, x, y, resolution=32)
            assert k_lower_bound_logratio(dom, x, y) <= val + 1e-6
            assert k_lower_bound_log1p(dom, x, y) <= val + 1e-6


class TestPathValidity:
    def test_vertices_interior_and_length_consistent(self):
        dom = SlitPlane(sampling_box=([-3, -3], [3, 3]))
        val, path = quasihyperbolic(dom, [1.0, 0.5], [1.0, -0.5], resolution=64)
        assert np.all(dom.boundary_distances(path.vertices) > 0.0)
        # consecutive vertices distinct
        seg = np.linalg.norm(np.diff(path.vertices, axis=0), axis=1)
        assert np.all(seg > 0.0)
        assert val == path.length

    def test_slit_straddling_pair_routes_around_origin(self):
        dom = SlitPlane(sampling_box=([-3, -3], [3, 3]))
        val, path = quasihyperbolic(dom, [1.0, 0.5], [1.0, -0.5], resolution=64)
        # must be far above the straight-chord estimate and beat the j bound
        assert val >= j_metric(dom, [1.0, 0.5], [1.0, -0.5])
        assert val > 2.0
        # path actually crosses the left half-plane
        assert path.vertices[:, 0].min() < 0.0

    def test_punctured_plane_pair(self):
        dom = PuncturedPlane(sampling_box=([-3, -3], [3, 3]))
        val, _ = quasihyperbolic(dom, [1.0, 0.0], [-1.0, 0.0], resolution=64)
        assert val >= k_lower_bound_logratio(dom, [1.0, 0.0], [-1.0, 0.0])
        assert math.isfinite(val)


class TestHigherDimensions:
    def test_halfspace_equals_rho(self):
        dom = HalfSpace(3)
        x, y = [0.0, 0.0, 1.0], [1.0, 0.5, 2.0]
        val, path = quasihyperbolic(dom, x, y)
        truth = rho_halfspace(x, y)
        assert abs(val - truth) / truth < 1e-4
        assert path.vertices.shape[1] == 3

    def test_ball_radial(self):
        dom = UnitBall(3)
        val, _ = quasihyperbolic(dom, [0.0, 0.0, 0.0], [0.0, 0.0, 0.5])
        assert val == pytest.approx(math.log(2.0), rel=1e-6)

    def test_ball_radial_same_ray(self):
        dom = UnitBall(3)
        x = np.array([0.1, 0.1, 0.1])
        y = 3.0 * x
        val, _ = quasihyperbolic(dom, x, y)
        truth = abs(math.log((1 - np.linalg.norm(x)) / (1 - np.linalg.norm(y))))
        assert val == pytest.approx(truth, rel=1e-6)

    def test_ball_general_unsupported(self):
        with pytest.raises(NotImplementedError):
            quasihyperbolic(UnitBall(3), [0.1, 0.0, 0.0], [0.0, 0.1, 0.0])


class TestErrors:
    def test_exterior_endpoint(self):
        with pytest.raises(ExteriorPointError):
            quasihyperbolic(UnitBall(2), [0.0, 0.0], [1.5, 0.0])

    def test_disconnected_grid_reports_resolution(self):
        # box excludes every grid node around the slit tip at this resolution
        dom = SlitPlane(sampling_box=([0.5, -1.0], [2.0, 1.0]))
        with pytest.raises(PathNotFoundError, match="resolution"):
            quasihyperbolic(dom, [1.0, 0.05], [1.0, -0.05], resolution=8)

    def test_bad_resolution(self):
        with pytest.raises(ValueError):
            quasihyperbolic(UnitBall(2), [0, 0], [0.5, 0], resolution=2)


class TestUniformity:
    def test_ball(self):
        ratio = uniformity_ratio(UnitBall(2), samples=40, seed=5, resolution=48)
        assert ratio <= 2.05

    def test_halfspace(self):
        ratio = uniformity_ratio(halfspace2(), samples=40, seed=6, resolution=48)
        assert ratio <= 2.05
