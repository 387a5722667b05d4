import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from harnacklab.specfun import (
    agm,
    c_of_k,
    elliptic_k,
    elliptic_k_series,
    mu,
    mu_inverse,
    phi_k,
    sphere_surface_area,
)


class TestEllipticK:
    def test_at_zero_exact(self):
        assert elliptic_k(0.0) == math.pi / 2

    def test_lemniscatic_point(self):
        # AGM oracle: K(1/sqrt2) = pi / (2 AGM(1, 1/sqrt2))
        r = 1 / math.sqrt(2)
        oracle = math.pi / (2 * agm(1.0, math.sqrt(1 - r * r)))
        assert elliptic_k(r) == pytest.approx(oracle, abs=0)
        assert elliptic_k(r) == pytest.approx(1.8540746773013717, abs=1e-12)

    def test_monotone_divergence(self):
        grid = np.linspace(0.0, 0.999999, 60)
        vals = [elliptic_k(r) for r in grid]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        # K(r) ~ log(4/sqrt(1-r^2)) as r -> 1
        assert elliptic_k(1 - 1e-12) > 14.0

    def test_agm_matches_series_below_half(self):
        for r in np.linspace(0.0, 0.5, 26):
            assert abs(elliptic_k(r) - elliptic_k_series(r)) < 1e-12

    def test_domain_error(self):
        with pytest.raises(ValueError):
            elliptic_k(1.0)
        with pytest.raises(ValueError):
            elliptic_k(-0.1)


class TestMu:
    def test_symmetry_point(self):
        assert mu(1 / math.sqrt(2)) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_strictly_decreasing_on_grid(self):
        grid = np.linspace(0.01, 0.99, 100)
        vals = [mu(r) for r in grid]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_endpoint_growth(self):
        assert mu(1e-6) > 10.0
        assert mu(1 - 1e-6) < 0.5

    def test_small_r_asymptotic(self):
        # mu(r) ~ log(4/r) as r -> 0
        assert mu(1e-9) == pytest.approx(math.log(4e9), rel=1e-10)

    def test_domain_error(self):
        for bad in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(ValueError):
                mu(bad)


class TestMuInverse:
    def test_symmetry_point(self):
        assert mu_inverse(math.pi / 2) == pytest.approx(1 / math.sqrt(2), abs=1e-10)

    def test_round_trip(self):
        for r in np.linspace(0.05, 0.95, 19):
            assert mu_inverse(mu(r)) == pytest.approx(r, abs=1e-10)
        assert mu_inverse(mu(0.3)) == pytest.approx(0.3, abs=1e-10)
        assert mu_inverse(mu(0.5)) == pytest.approx(0.5, abs=1e-10)

    def test_large_argument_clamps_near_zero(self):
        r = mu_inverse(50.0)
        assert 0.0 < r < 1e-8

    def test_domain_error(self):
        with pytest.raises(ValueError):
            mu_inverse(0.0)
        with pytest.raises(ValueError):
            mu_inverse(-1.0)

    @given(st.floats(min_value=0.05, max_value=0.95))
    @settings(max_examples=100, deadline=None)
    def test_round_trip_property(self, r):
        assert abs(mu_inverse(mu(r)) - r) < 1e-10


class TestPhiK:
    def test_identity_at_k_one(self):
        for r in np.linspace(0.05, 0.95, 19):
            assert phi_k(1.0, r) == pytest.approx(r, abs=1e-10)

    def test_boundary_conventions(self):
        assert phi_k(2.0, 0.0) == 0.0
        assert phi_k(2.0, 1.0) == 1.0

    def test_halving_oracle(self):
        # K = 2 halves mu; phi_2(0.5) must exceed 0.5 and stay below 1
        v = phi_k(2.0, 0.5)
        assert 0.5 < v < 1.0
        assert mu(v) == pytest.approx(mu(0.5) / 2.0, abs=1e-9)

    def test_landen_special_value(self):
        # classical identity phi_2(r) = 2 sqrt(r) / (1 + r)
        for r in (0.2, 0.5, 0.7):
            assert phi_k(2.0, r) == pytest.approx(2 * math.sqrt(r) / (1 + r), abs=1e-10)

    def test_mu_consistency_grid(self):
        for K in (1.0, 1.5, 2.0, 4.0):
            for r in np.arange(0.05, 0.951, 0.05):
                assert abs(mu(phi_k(K, r)) - mu(r) / K) < 1e-9

    def test_monotone_in_r_and_k(self):
        rs = np.linspace(0.05, 0.95, 20)
        vals = [phi_k(2.0, r) for r in rs]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        ks = [1.0, 1.5, 2.0, 3.0, 4.0]
        vals = [phi_k(K, 0.5) for K in ks]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            phi_k(0.5, 0.5)
        with pytest.raises(ValueError):
            phi_k(2.0, 1.5)


class TestCOfK:
    def test_c_one_is_one(self):
        assert c_of_k(1.0) == pytest.approx(1.0, abs=1e-10)

    def test_monotone(self):
        ks = [1.0, 1.5, 2.0, 3.0, 4.0, 6.0]
        vals = [c_of_k(K) for K in ks]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        assert c_of_k(2.0) > 1.0

    def test_mu_based_oracle(self):
        # c(K) = 2 artanh(mu^{-1}(mu(tanh 1/2)/K)) evaluated independently
        K = 2.0
        target = mu(math.tanh(0.5)) / K
        lo, hi = 1e-9, 1 - 1e-9
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mu(mid) > target:
                lo = mid
            else:
                hi = mid
        oracle = 2 * math.atanh(0.5 * (lo + hi))
        assert c_of_k(K) == pytest.approx(oracle, abs=1e-9)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            c_of_k(0.99)


class TestSphereSurfaceArea:
    def test_circle(self):
        assert sphere_surface_area(2) == pytest.approx(2 * math.pi, rel=1e-15)

    def test_two_sphere(self):
        assert sphere_surface_area(3) == pytest.approx(4 * math.pi, rel=1e-14)

    def test_three_sphere(self):
        assert sphere_surface_area(4) == pytest.approx(2 * math.pi ** 2, rel=1e-14)

    def test_matches_gamma(self):
        for n in range(2, 12):
            ref = 2 * math.pi ** (n / 2) / math.gamma(n / 2)
            assert sphere_surface_area(n) == pytest.approx(ref, rel=1e-13)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            sphere_surface_area(1)
