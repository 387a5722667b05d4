"""Harnack constants, the Harnack metric on the model domains, and the
distortion bounds satisfied by the metric under quasiregular maps.

A nonnegative function u on G satisfies the (s, C(s))-Harnack inequality if

    max over closed B(x, s r) of u  <=  C(s) * min over closed B(x, s r) of u

whenever B(x, r) lies in G.  For positive harmonic functions on a ball the
sharp-form constant is

    C(s, n) = (1 / (1 - s^2)) * ((1 + s) / (1 - s))^n,

and u(x) = alpha d(x)^beta has C(s) = ((1+s)/(1-s))^{|beta|}.  The Harnack
(pseudo)metric h_G(x,y) = sup |log(u(x)/u(y))| over positive harmonic u has
the closed forms h = 2 rho on the unit ball and h = rho on the half-space.

The quasiregular / quasiconformal bound calculators in this module are the
right-hand sides of the distortion inequalities the Harnack metric satisfies
under such maps; the image-domain Harnack constant for u = d(f(x)) requires a
connected image boundary, and ``counterexample_remark`` reproduces the
standard analytic counterexample  f(z) = exp((z+1)/(z-1))  on the punctured
disk showing that the connectedness hypothesis cannot be dropped: along
x_p = (e^p - 1)/(e^p + 1) the ratio |f(x_p)/f(x_{p+1})| = exp(e^{p+1} - e^p)
explodes while the would-be bound stays constant (all arithmetic is kept in
log space; the raw ratios overflow doubles from p = 2 on).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domains import Domain, UnitBall, HalfSpace
from .metrics import rho_ball, rho_halfspace
from .records import VerificationRecord
from .specfun import c_of_k, sphere_surface_area

__all__ = [
    "HarnackParams",
    "DistortionParams",
    "NoClosedFormError",
    "harnack_constant_ball",
    "harnack_constant_power_distance",
    "empirical_harnack_constant",
    "harnack_metric",
    "growth_bound_ball",
    "sphere_harnack_bound",
    "qr_harnack_constant",
    "qr_ball_metric_bound",
    "qc_ball_metric_bound",
    "qr_halfspace_metric_bound",
    "qr_planar_metric_bound",
    "hg_upper_bound",
    "counterexample_remark",
    "first_failure_index",
    "SLIT_PLANE_ARG_CONSTANT",
]

#: sharp constant for u(z) = arg z on the slit plane at s = 1/2
SLIT_PLANE_ARG_CONSTANT = (4.0 + math.pi) / (4.0 - math.pi)


class NoClosedFormError(ValueError):
    """The Harnack metric has no implemented closed form on this domain."""


@dataclass(frozen=True)
class HarnackParams:
    """The pair (s, C(s)) of a Harnack inequality, plus the dimension."""

    s: float
    C: float
    n: int = 2

    def __post_init__(self):
        if not 0.0 < self.s < 1.0:
            raise ValueError(f"s must lie in (0, 1), got {self.s}")
        if self.C < 1.0:
            raise ValueError(f"C must be >= 1, got {self.C}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")


@dataclass(frozen=True)
class DistortionParams:
    """External constants of the quasiregular/quasiconformal bounds.

    ``c_n`` (the dimensional constant of the modulus lower bound) and ``b``
    (the quasiconformal ball constant, -> 1 as K -> 1) have no closed form
    here; they default to 1.0 and are user-owned.
    """

    K: float = 1.0
    K_I: float = 1.0
    A: float = 1.0
    c_n: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if self.K < 1.0 or self.K_I < 1.0 or self.A < 1.0:
            raise ValueError("K, K_I and A must all be >= 1")
        if self.c_n <= 0.0 or self.b <= 0.0:
            raise ValueError("c_n and b must be positive")

    def alpha(self, n: int) -> float:
        """alpha = K^{1/(1-n)} in (0, 1]; equals 1 iff K = 1."""
        if n < 2:
            raise ValueError("alpha requires n >= 2")
        return self.K ** (1.0 / (1.0 - n))


def harnack_constant_ball(s: float, n: int = 2) -> float:
    """C(s, n) = (1/(1-s^2)) ((1+s)/(1-s))^n for positive harmonic functions."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    # divide last: keeps dyadic cases (e.g. C(1/2, 2) = 12) exact
    return ((1.0 + s) / (1.0 - s)) ** n / (1.0 - s * s)


def harnack_constant_power_distance(s: float, beta: float) -> float:
    """C(s) = ((1+s)/(1-s))^{|beta|} for u(x) = alpha d(x)^beta, beta != 0."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    if beta == 0.0:
        raise ValueError("beta must be nonzero")
    return ((1.0 + s) / (1.0 - s)) ** abs(beta)


def sphere_harnack_bound(s: float, n: int = 2) -> float:
    """Bound for u(x)/u(y) with y on the sphere of radius s(1-|x|) around x.

    Identical to :func:`harnack_constant_ball`; the paired side condition is
    rho(x, y) >= log(1 + s) for such y.
    """
    return harnack_constant_ball(s, n)


def growth_bound_ball(s: float, C: float, rho: float) -> float:
    """Growth bound C^{1+t} for a Harnack function on the unit ball.

    t = log((1+r)/(1-r)) / log((1+s)/(1-s)) with r = tanh(rho/2), which
    collapses to t = rho / log((1+s)/(1-s)).
    """
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    if C < 1.0:
        raise ValueError(f"C must be >= 1, got {C}")
    if rho < 0.0:
        raise ValueError(f"rho must be >= 0, got {rho}")
    t = rho / math.log((1.0 + s) / (1.0 - s))
    return C ** (1.0 + t)


def qr_harnack_constant(params: DistortionParams, n: int, s: float,
                        d_x: float, separation: float) -> float:
    """Harnack constant of u = d(f(x)) for a quasiregular f into a uniform domain:

        C(s) = exp( (A K_I / c_n) omega_{n-1} (log(s d(x) / |x-y|))^{1-n} )

    valid for 0 < |x-y| < s d(x); outside that range the modulus bound is
    vacuous and a ValueError is raised.
    """
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    if d_x <= 0.0:
        raise ValueError("d_x must be positive")
    if not 0.0 < separation < s * d_x:
        raise ValueError("outside validity range: need 0 < separation < s * d_x")
    omega = sphere_surface_area(n)
    exponent = (params.A * params.K_I / params.c_n) * omega \
        * math.log(s * d_x / separation) ** (1 - n)
    return math.exp(exponent)


def harnack_metric(domain: Domain, x, y) -> float:
    """Closed-form Harnack metric: 2 rho on the unit ball, rho on the half-space."""
    if isinstance(domain, UnitBall):
        return 2.0 * rho_ball(x, y)
    if isinstance(domain, HalfSpace):
        return rho_halfspace(x, y)
    raise NoClosedFormError(f"no closed form for the Harnack metric on {domain.name}")


def qr_ball_metric_bound(K: float, h: float) -> float:
    """Quasiregular self-maps of the ball:  h_image <= 2 K (h/2 + log 4)."""
    if K < 1.0:
        raise ValueError(f"K must be >= 1, got {K}")
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    return 2.0 * K * (0.5 * h + math.log(4.0))


def qc_ball_metric_bound(params: DistortionParams, n: int, h: float) -> float:
    """Quasiconformal maps of the ball onto itself:  b max{h, 2^{1-a} h^a}, a = K^{1/(1-n)}."""
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    a = params.alpha(n)
    return params.b * max(h, 2.0 ** (1.0 - a) * h ** a)


def qr_halfspace_metric_bound(K: float, h: float) -> float:
    """Quasiregular self-maps of the half-space:  K (h + log 4)."""
    if K < 1.0:
        raise ValueError(f"K must be >= 1, got {K}")
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    return K * (h + math.log(4.0))


def qr_planar_metric_bound(K: float, h: float) -> float:
    """Planar quasiregular maps:  c(K) max{h, 2^{1-1/K} h^{1/K}} with c(1) = 1."""
    if K < 1.0:
        raise ValueError(f"K must be >= 1, got {K}")
    if h < 0.0:
        raise ValueError(f"h must be >= 0, got {h}")
    return c_of_k(K) * max(h, 2.0 ** (1.0 - 1.0 / K) * h ** (1.0 / K))


def hg_upper_bound(s: float, C: float, k_or_rho: float,
                   variant: str = "general") -> float:
    """Upper bound for the Harnack metric through the quasihyperbolic metric.

    general:         h_G <= (1 + k_G / (2 log(1+s))) log C(s)
    ball_halfspace:  h_G <= (1 + rho_G / log((1+s)/(1-s))) log C(s)
    """
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    if C < 1.0:
        raise ValueError(f"C must be >= 1, got {C}")
    if k_or_rho < 0.0:
        raise ValueError("distance argument must be >= 0")
    if variant == "general":
        return (1.0 + k_or_rho / (2.0 * math.log1p(s))) * math.log(C)
    if variant == "ball_halfspace":
        return (1.0 + k_or_rho / math.log((1.0 + s) / (1.0 - s))) * math.log(C)
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# empirical Harnack verification
# ---------------------------------------------------------------------------

def _ball_samples(center: np.ndarray, radius: float, ball_samples: int,
                  sphere_samples: int, rng: np.random.Generator) -> np.ndarray:
    """Stratified radial-angular samples of the closed ball plus its sphere.

    The extrema of a harmonic function on a closed ball sit on the sphere, so
    the sphere is always sampled explicitly.
    """
    n = len(center)
    total = ball_samples + sphere_samples
    direc = rng.standard_normal((total, n))
    direc /= np.linalg.norm(direc, axis=1)[:, None]
    # stratified radii: one radius per equal-volume shell
    strata = (np.arange(ball_samples) + rng.uniform(0.0, 1.0, ball_samples)) / ball_samples
    radii = radius * strata ** (1.0 / n)
    radii = np.concatenate([radii, np.full(sphere_samples, radius)])
    return center[None, :] + radii[:, None] * direc


def empirical_harnack_constant(u, domain: Domain, s: float,
                               ball_samples: int = 200, sphere_samples: int = 64,
                               seed: int = 0, centers: int = 20,
                               margin: float = 0.05) -> float:
    """Estimate from below the best Harnack constant C(s) of u on the domain.

    Draws seeded interior centers x, takes r = d_G(x) (the largest admissible
    ball), samples the closed ball B(x, s r), and returns the worst ratio
    max u / min u over the sampled sets.  u must be strictly positive on every
    sample; ``u`` is called with an (m, n) array of points and must return the
    m sampled values.
    """
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    xs = domain.sample_interior(centers, seed=seed, margin=margin)
    worst = 1.0
    for i, x in enumerate(xs):
        rng = np.random.default_rng([seed, i])
        r = domain.dist_to_boundary(x)
        pts = _ball_samples(x, s * r, ball_samples, sphere_samples, rng)
        vals = np.asarray(u(pts), dtype=float)
        if np.any(vals <= 0.0) or not np.all(np.isfinite(vals)):
            raise ValueError("invalid Harnack candidate: u must be strictly positive")
        worst = max(worst, float(vals.max() / vals.min()))
    return worst


# ---------------------------------------------------------------------------
# the connected-boundary counterexample
# ---------------------------------------------------------------------------

def counterexample_remark(p_max: int, s: float = 0.5,
                          params: DistortionParams | None = None) -> list[VerificationRecord]:
    """Reproduce the analytic counterexample on B^2 minus a boundary point.

    For f(z) = exp((z+1)/(z-1)) and x_p = (e^p - 1)/(e^p + 1) = tanh(p/2),
    compare log |f(x_p)/f(x_{p+1})| = e^{p+1} - e^p against the logarithm of
    the formal image-domain Harnack constant evaluated through the chain
    rho -> 2j -> modulus bound at rho(x_p, x_{p+1}) = 1:

        log RHS = (A K_I / c_n) omega_1 (log(s / (e^{2 rho} - 1)))^{1-n}.

    The right side is constant in p, so the records fail from some p0 on;
    lhs and rhs are stored in log space.
    """
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    if params is None:
        params = DistortionParams()
    n = 2
    rho = 1.0  # hyperbolic distance between consecutive x_p
    omega = sphere_surface_area(n)
    log_rhs = (params.A * params.K_I / params.c_n) * omega \
        * math.log(s / (math.exp(2.0 * rho) - 1.0)) ** (1 - n)
    records = []
    for p in range(1, p_max + 1):
        log_lhs = math.exp(p + 1) - math.exp(p)
        records.append(VerificationRecord.check(
            inputs={"p": p, "s": s, "rho": rho}, lhs=log_lhs, rhs=log_rhs))
    return records


def first_failure_index(records: list[VerificationRecord]) -> int | None:
    """Smallest p with a failing record, or None if everything passed."""
    failing = [int(r.inputs["p"]) for r in records if not r.passed]
    return min(failing) if failing else None
