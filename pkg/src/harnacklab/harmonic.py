"""Poisson-integral engine on planar disks and sharp harmonic Schwarz bounds.

A function u harmonic on the disk B(a, R) and continuous up to the boundary
is reproduced from its boundary values g(theta) = u(a + R e^{i theta}) by

    u(a + r e^{it}) = (1/2pi) Int (R^2 - r^2) / (R^2 + r^2 - 2 r R cos(t - th))
                      g(th) dth,

and u(a) is the plain mean of g.  The engine evaluates the integral with the
uniform trapezoid rule on N nodes (spectrally accurate for periodic data) and
doubles N until two successive answers agree to 1e-10, capped at 2^20.  A
finite trapezoid sum is itself a finite combination of Poisson kernels, so
the evaluation is exactly harmonic at every N.  Gradients use the analytically
differentiated kernel, never finite differences of the quadrature.

Sharp bounds implemented here, all for z relative to the center:

    Heinz:          |u(z)| <= (4/pi) arctan|z|          (u(0) = 0, |u| < 1)
    centered form:  |u(a+z) - (R^2-|z|^2)/(R^2+|z|^2) u(a)|
                        <= (2M/pi) arctan(2R|z| / (R^2-|z|^2)),   |u| <= M
    Colonna:        |du/dz| + |du/dzbar| <= (4/pi) / (1-|z|^2)
    Kalaj-Vuorinen: |grad u(z)| <= (4/pi) (1-u(z)^2) / (1-|z|^2)
    Chen:           |grad u(z)| <= (4/pi) cos(pi u(z)/2) / (1-|z|^2)

with the interval variants for u into (alpha, beta) obtained by the affine
substitution v = (2/(beta-alpha))(u - (alpha+beta)/2).  The extremal functions
u0(z) = -(2M/pi) arg((R-z)/(R+z)) and

    ell(z) = (alpha+beta)/2 + ((beta-alpha)/pi) arctan(2y / (1-x^2-y^2))

attain the centered bound on the imaginary axis and the interval gradient
bound at the origin; note ell = (alpha+beta)/2 + ((beta-alpha)/2) u0 on the
unit disk, so |grad ell(0)| = 2(beta-alpha)/pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domains import ExteriorPointError
from .records import VerificationRecord

__all__ = [
    "DiskSpec",
    "IntervalRange",
    "HarmonicDiskFunction",
    "BoundaryData",
    "ExtremalBounded",
    "ExtremalInterval",
    "PoissonKernelFunction",
    "ConstantFunction",
    "CoordinateFunction",
    "poisson_eval",
    "mean_value",
    "heinz_bound",
    "schwarz_center_bound",
    "centering_coefficient",
    "extremal_u0",
    "extremal_ell",
    "gradient",
    "finite_difference_gradient",
    "wirtinger_moduli",
    "kv_gradient_bound",
    "chen_gradient_bound",
    "interval_gradient_bound",
    "schwarz_deviation_check",
    "colonna_check",
    "TrigPolynomial",
    "random_bounded_function",
    "random_positive_function",
    "sample_disk_points",
]

_DOUBLING_TOL = 1e-10
_NODE_CAP = 2 ** 20


@dataclass(frozen=True)
class DiskSpec:
    """Disk B(a, R) with a sup-norm budget M for the functions living on it."""

    center: complex = 0j
    radius: float = 1.0
    bound: float = 1.0

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError("disk radius must be positive")
        if self.bound <= 0.0:
            raise ValueError("disk bound must be positive")


UNIT_DISK = DiskSpec()


@dataclass(frozen=True)
class IntervalRange:
    """Open target interval (alpha, beta) of a real harmonic function."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not self.alpha < self.beta:
            raise ValueError("need alpha < beta")

    @property
    def mid(self) -> float:
        return 0.5 * (self.alpha + self.beta)

    @property
    def width(self) -> float:
        return self.beta - self.alpha


def _as_complex(z) -> tuple[np.ndarray, bool]:
    """Accept complex scalars/arrays or (..., 2) point arrays; return (array, scalar?)."""
    if isinstance(z, (tuple, list)) and len(z) == 2 and np.isscalar(z[0]):
        return np.asarray(complex(z[0], z[1]))[None], True
    arr = np.asarray(z)
    if arr.dtype.kind in "iuf" and arr.ndim >= 1 and arr.shape[-1] == 2:
        arr = arr[..., 0] + 1j * arr[..., 1]
    if arr.ndim == 0:
        return np.asarray(arr, dtype=complex)[None], True
    return np.asarray(arr, dtype=complex).ravel(), False


def _restore(values: np.ndarray, scalar: bool):
    return values[0] if scalar else values


class HarmonicDiskFunction:
    """A harmonic function on a disk; z arguments are relative to the center."""

    disk: DiskSpec = UNIT_DISK
    complex_valued: bool = False

    def eval(self, z):
        raise NotImplementedError

    def gradient(self, z):
        """(..., 2) array of (d/dx, d/dy); complex entries for complex-valued f."""
        raise NotImplementedError

    def boundary(self, theta):
        raise NotImplementedError

    def mean_value(self):
        """Value at the center; equals the boundary mean for these functions."""
        return self.eval(0j)

    def quadrature_error(self) -> float:
        """Estimate of the evaluation error of the last eval (0 for closed forms)."""
        return 0.0

    def _check_interior(self, z: np.ndarray):
        if np.any(np.abs(z) >= self.disk.radius):
            raise ExteriorPointError("point is not interior to the disk")


class BoundaryData(HarmonicDiskFunction):
    """Harmonic extension of boundary data g via trapezoid Poisson quadrature.

    ``g`` maps an array of angles to real or complex values; ``nodes`` is the
    starting rule size (a power of two, >= 64).  With ``auto_refine`` the rule
    doubles until two successive evaluations agree to 1e-10 in the sup norm.
    """

    def __init__(self, g, disk: DiskSpec = UNIT_DISK, nodes: int = 1024,
                 auto_refine: bool = True):
        if nodes < 64 or nodes & (nodes - 1):
            raise ValueError("nodes must be a power of two >= 64")
        self.g = g
        self.disk = disk
        self.nodes = int(nodes)
        self.auto_refine = bool(auto_refine)
        self._cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._last_error = 0.0
        probe = np.asarray(g(np.array([0.0, 1.0, 2.0])))
        self.complex_valued = probe.dtype.kind == "c"

    def _grid(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        if n not in self._cache:
            theta = -math.pi + 2.0 * math.pi * np.arange(n) / n
            self._cache[n] = (theta, np.asarray(self.g(theta)))
            if len(self._cache) > 8:  # keep the two largest rules
                for key in sorted(self._cache)[:-2]:
                    del self._cache[key]
        return self._cache[n]

    def _eval_fixed(self, z: np.ndarray, n: int) -> np.ndarray:
        theta, gv = self._grid(n)
        r = np.abs(z)
        t = np.angle(z)
        rr = r * r
        R2 = self.disk.radius ** 2
        num = (R2 - rr)[:, None]
        den = R2 + rr[:, None] - 2.0 * self.disk.radius * r[:, None] * np.cos(t[:, None] - theta[None, :])
        return (num / den) @ gv / n

    def _grad_fixed(self, z: np.ndarray, n: int) -> np.ndarray:
        theta, gv = self._grid(n)
        R = self.disk.radius
        wx, wy = R * np.cos(theta), R * np.sin(theta)
        zx, zy = z.real[:, None], z.imag[:, None]
        dx = wx[None, :] - zx
        dy = wy[None, :] - zy
        den = dx * dx + dy * dy
        num = R * R - (zx * zx + zy * zy)
        gx = ((-2.0 * zx * den + 2.0 * num * dx) / den ** 2) @ gv / n
        gy = ((-2.0 * zy * den + 2.0 * num * dy) / den ** 2) @ gv / n
        return np.stack([gx, gy], axis=-1)

    def _refined(self, z: np.ndarray, kernel) -> np.ndarray:
        n = self.nodes
        prev = kernel(z, n)
        if not self.auto_refine:
            self._last_error = float("nan")
            return prev
        while n < _NODE_CAP:
            n *= 2
            cur = kernel(z, n)
            diff = float(np.max(np.abs(cur - prev)))
            if diff <= _DOUBLING_TOL:
                self._last_error = diff
                return cur
            prev = cur
        self._last_error = float("inf")
        return prev

    def eval(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        vals = self._refined(zz, self._eval_fixed)
        if not self.complex_valued:
            vals = vals.real
        return _restore(vals, scalar)

    def eval_with_nodes(self, z, nodes: int):
        """Fixed-rule evaluation (used by quadrature-convergence tests)."""
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        vals = self._eval_fixed(zz, nodes)
        if not self.complex_valued:
            vals = vals.real
        return _restore(vals, scalar)

    def gradient(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        grads = self._refined(zz, self._grad_fixed)
        if not self.complex_valued:
            grads = grads.real
        return grads[0] if scalar else grads

    def boundary(self, theta):
        return self.g(np.asarray(theta, dtype=float))

    def mean_value(self):
        n = self.nodes
        _, gv = self._grid(n)
        prev = gv.mean()
        while n < _NODE_CAP:
            n *= 2
            _, gv = self._grid(n)
            cur = gv.mean()
            if abs(cur - prev) <= 1e-13:
                prev = cur
                break
            prev = cur
        return prev if self.complex_valued else float(prev.real)

    def quadrature_error(self) -> float:
        return self._last_error

    def boundary_sup(self, grid: int = 4096) -> float:
        theta = -math.pi + 2.0 * math.pi * np.arange(grid) / grid
        return float(np.max(np.abs(self.g(theta))))


class ExtremalBounded(HarmonicDiskFunction):
    """u0(z) = -(2M/pi) arg((R - z)/(R + z)): the extremal of the centered bound.

    (R - z)/(R + z) maps the disk onto the right half-plane, so |u0| < M, and
    on the imaginary axis u0(i r) = (2M/pi) arctan(2 r R/(R^2 - r^2)) meets the
    bound exactly.
    """

    def __init__(self, disk: DiskSpec = UNIT_DISK):
        self.disk = disk

    def eval(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        R, M = self.disk.radius, self.disk.bound
        vals = -(2.0 * M / math.pi) * np.angle((R - zz) / (R + zz))
        return _restore(vals, scalar)

    def gradient(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        R, M = self.disk.radius, self.disk.bound
        # u0 = -(2M/pi) Im log F with F = (R-z)/(R+z); F'/F = -2R/(R^2 - z^2)
        G = 2.0 * R / (R * R - zz * zz)
        grads = (2.0 * M / math.pi) * np.stack([G.imag, G.real], axis=-1)
        return grads[0] if scalar else grads

    def boundary(self, theta):
        th = np.asarray(theta, dtype=float)
        R, M = self.disk.radius, self.disk.bound
        w = R * np.exp(1j * th)
        return -(2.0 * M / math.pi) * np.angle((R - w) / (R + w))


class ExtremalInterval(HarmonicDiskFunction):
    """ell(z) into (alpha, beta) on the unit disk; attains the interval gradient
    bound at the origin with |grad ell(0)| = 2(beta-alpha)/pi."""

    def __init__(self, bounds: IntervalRange):
        self.bounds = bounds
        self.disk = UNIT_DISK
        self._u0 = ExtremalBounded(UNIT_DISK)

    def eval(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        vals = self.bounds.mid + (self.bounds.width / math.pi) * np.arctan(
            2.0 * zz.imag / (1.0 - zz.real ** 2 - zz.imag ** 2))
        return _restore(vals, scalar)

    def gradient(self, z):
        return 0.5 * self.bounds.width * self._u0.gradient(z)

    def boundary(self, theta):
        th = np.asarray(theta, dtype=float)
        # radial limit: beta above the real axis, alpha below, midpoint on it
        vals = np.full_like(th, self.bounds.mid)
        vals[np.sin(th) > 0] = self.bounds.beta
        vals[np.sin(th) < 0] = self.bounds.alpha
        return vals


class PoissonKernelFunction(HarmonicDiskFunction):
    """The Poisson kernel z -> (R^2 - |z|^2)/|R e^{i angle} - z|^2: positive harmonic."""

    def __init__(self, angle: float = 0.0, disk: DiskSpec = UNIT_DISK):
        self.angle = float(angle)
        self.disk = disk

    def eval(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        R = self.disk.radius
        w = R * complex(math.cos(self.angle), math.sin(self.angle))
        vals = (R * R - np.abs(zz) ** 2) / np.abs(w - zz) ** 2
        return _restore(vals, scalar)

    def gradient(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        R = self.disk.radius
        w = R * complex(math.cos(self.angle), math.sin(self.angle))
        dx = w.real - zz.real
        dy = w.imag - zz.imag
        den = dx * dx + dy * dy
        num = R * R - np.abs(zz) ** 2
        gx = (-2.0 * zz.real * den + 2.0 * num * dx) / den ** 2
        gy = (-2.0 * zz.imag * den + 2.0 * num * dy) / den ** 2
        grads = np.stack([gx, gy], axis=-1)
        return grads[0] if scalar else grads

    def boundary(self, theta):
        raise ValueError("the Poisson kernel is singular on the boundary")


class ConstantFunction(HarmonicDiskFunction):
    def __init__(self, value, disk: DiskSpec = UNIT_DISK):
        self.value = value
        self.disk = disk
        self.complex_valued = isinstance(value, complex)

    def eval(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        return _restore(np.full(zz.shape, self.value), scalar)

    def gradient(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        grads = np.zeros(zz.shape + (2,))
        return grads[0] if scalar else grads

    def boundary(self, theta):
        return np.full(np.shape(theta), self.value)


class CoordinateFunction(HarmonicDiskFunction):
    """Absolute coordinate function u(a + z) = Re(a + z) (axis 0) or Im (axis 1)."""

    def __init__(self, axis: int = 0, disk: DiskSpec = UNIT_DISK):
        if axis not in (0, 1):
            raise ValueError("axis must be 0 or 1")
        self.axis = axis
        self.disk = disk

    def eval(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        w = self.disk.center + zz
        vals = w.real if self.axis == 0 else w.imag
        return _restore(vals, scalar)

    def gradient(self, z):
        zz, scalar = _as_complex(z)
        self._check_interior(zz)
        grads = np.zeros(zz.shape + (2,))
        grads[..., self.axis] = 1.0
        return grads[0] if scalar else grads

    def boundary(self, theta):
        th = np.asarray(theta, dtype=float)
        w = self.disk.center + self.disk.radius * np.exp(1j * th)
        return w.real if self.axis == 0 else w.imag


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def poisson_eval(f: HarmonicDiskFunction, r, t):
    """Evaluate f at center + r e^{it} (closed forms directly, data by quadrature)."""
    r = np.asarray(r, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(r < 0.0):
        raise ValueError("r must be >= 0")
    if np.any(r >= f.disk.radius):
        raise ExteriorPointError("r must be < the disk radius")
    return f.eval(r * np.exp(1j * t))


def mean_value(f: HarmonicDiskFunction):
    """Boundary mean of f; equals the value at the center."""
    return f.mean_value()


def heinz_bound(z_abs: float) -> float:
    """(4/pi) arctan|z|: bound for |f(z)| when f(0) = 0 and f maps into the disk."""
    if not 0.0 <= z_abs < 1.0:
        raise ValueError(f"need 0 <= |z| < 1, got {z_abs}")
    return (4.0 / math.pi) * math.atan(z_abs)


def centering_coefficient(disk: DiskSpec, z_abs: float) -> float:
    """(R^2 - |z|^2)/(R^2 + |z|^2): weight of the center value in the sharp bound."""
    if not 0.0 <= z_abs < disk.radius:
        raise ValueError("need 0 <= |z| < R")
    R2 = disk.radius ** 2
    return (R2 - z_abs * z_abs) / (R2 + z_abs * z_abs)


def schwarz_center_bound(disk: DiskSpec, z_abs: float) -> float:
    """(2M/pi) arctan(2R|z|/(R^2 - |z|^2)): sharp deviation from the weighted center value."""
    if not 0.0 <= z_abs < disk.radius:
        raise ValueError("need 0 <= |z| < R")
    R, M = disk.radius, disk.bound
    return (2.0 * M / math.pi) * math.atan(2.0 * R * z_abs / (R * R - z_abs * z_abs))


def extremal_u0(disk: DiskSpec, z):
    """Closed-form evaluation of the extremal u0 (see :class:`ExtremalBounded`)."""
    return ExtremalBounded(disk).eval(z)


def extremal_ell(bounds: IntervalRange, z):
    """Closed-form evaluation of the interval extremal ell (see :class:`ExtremalInterval`)."""
    return ExtremalInterval(bounds).eval(z)


def gradient(f: HarmonicDiskFunction, z):
    """Gradient (d/dx, d/dy) of f at z (relative coordinates)."""
    return f.gradient(z)


def finite_difference_gradient(f: HarmonicDiskFunction, z, step: float = 1e-5):
    """Central-difference gradient; cross-check for the analytic kernels."""
    zz, scalar = _as_complex(z)
    gx = (np.asarray(f.eval(zz + step)) - np.asarray(f.eval(zz - step))) / (2.0 * step)
    gy = (np.asarray(f.eval(zz + 1j * step)) - np.asarray(f.eval(zz - 1j * step))) / (2.0 * step)
    grads = np.stack([gx, gy], axis=-1)
    return grads[0] if scalar else grads


def wirtinger_moduli(f: HarmonicDiskFunction, z):
    """(|df/dz|, |df/dzbar|) from the real gradients of the parts."""
    grads = np.asarray(f.gradient(z))
    gx = grads[..., 0]
    gy = grads[..., 1]
    dz = 0.5 * (gx - 1j * gy)
    dzbar = 0.5 * (gx + 1j * gy)
    return np.abs(dz), np.abs(dzbar)


def kv_gradient_bound(u_val: float, z_abs: float) -> float:
    """(4/pi)(1 - u^2)/(1 - |z|^2) for real harmonic u of the disk into (-1, 1)."""
    if not -1.0 < u_val < 1.0:
        raise ValueError(f"need |u| < 1, got {u_val}")
    if not 0.0 <= z_abs < 1.0:
        raise ValueError(f"need 0 <= |z| < 1, got {z_abs}")
    return (4.0 / math.pi) * (1.0 - u_val * u_val) / (1.0 - z_abs * z_abs)


def chen_gradient_bound(u_val: float, z_abs: float) -> float:
    """(4/pi) cos(pi u/2)/(1 - |z|^2); never exceeds the Kalaj-Vuorinen bound."""
    if not -1.0 < u_val < 1.0:
        raise ValueError(f"need |u| < 1, got {u_val}")
    if not 0.0 <= z_abs < 1.0:
        raise ValueError(f"need 0 <= |z| < 1, got {z_abs}")
    return (4.0 / math.pi) * math.cos(0.5 * math.pi * u_val) / (1.0 - z_abs * z_abs)


def interval_gradient_bound(bounds: IntervalRange, u_val: float, z_abs: float,
                            variant: str = "quadratic") -> float:
    """Gradient bound for u into (alpha, beta); quadratic and cosine variants.

    Both reduce to the (-1, 1) bounds under v = (2/(beta-alpha))(u - mid),
    scaled by (beta-alpha)/2.
    """
    if not bounds.alpha < u_val < bounds.beta:
        raise ValueError("u_val must lie strictly inside (alpha, beta)")
    if not 0.0 <= z_abs < 1.0:
        raise ValueError(f"need 0 <= |z| < 1, got {z_abs}")
    w = bounds.width
    centered = u_val - bounds.mid
    lead = 2.0 * w / math.pi
    if variant == "quadratic":
        return lead * (1.0 - (4.0 / (w * w)) * centered * centered) / (1.0 - z_abs * z_abs)
    if variant == "cosine":
        return lead * math.cos(math.pi * centered / w) / (1.0 - z_abs * z_abs)
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def sample_disk_points(count: int, seed: int, rmax: float = 0.95,
                       rmin: float = 0.0) -> np.ndarray:
    """Seeded complex sample points with rmin <= |z| <= rmax (area-uniform)."""
    rng = np.random.default_rng(seed)
    r = np.sqrt(rng.uniform(rmin * rmin, rmax * rmax, count))
    t = rng.uniform(-math.pi, math.pi, count)
    return r * np.exp(1j * t)


def schwarz_deviation_check(f: HarmonicDiskFunction, samples: int = 100,
                            seed: int = 0, slack: float = 1e-8) -> list[VerificationRecord]:
    """Check |f(a+z) - coeff(|z|) f(a)| <= (2M/pi) arctan(2R|z|/(R^2-|z|^2)).

    Sample points stay inside 0.95 R (all bounds degenerate at the boundary).
    For quadrature-backed functions the boundary data must respect |g| <= M.
    """
    disk = f.disk
    if isinstance(f, BoundaryData) and f.boundary_sup() > disk.bound * (1.0 + 1e-12):
        raise ValueError("invalid input: boundary data exceeds the disk bound M")
    z = sample_disk_points(samples, seed, rmax=0.95 * disk.radius)
    center = f.mean_value()
    vals = np.asarray(f.eval(z))
    err = f.quadrature_error()
    extra = err if math.isfinite(err) else 0.0
    records = []
    for i in range(samples):
        za = float(np.abs(z[i]))
        lhs = abs(vals[i] - centering_coefficient(disk, za) * center)
        rhs = schwarz_center_bound(disk, za)
        records.append(VerificationRecord.check(
            inputs={"z_re": float(z[i].real), "z_im": float(z[i].imag)},
            lhs=float(lhs), rhs=float(rhs), slack=slack + extra))
    return records


def colonna_check(f: HarmonicDiskFunction, samples: int = 100, seed: int = 0,
                  slack: float = 1e-8) -> list[VerificationRecord]:
    """Check the Schwarz-Pick estimate |df/dz| + |df/dzbar| <= (4/pi)/(1-|z|^2)
    for harmonic maps of the unit disk into itself."""
    if f.disk.radius != 1.0:
        raise ValueError("the Schwarz-Pick estimate is stated on the unit disk")
    z = sample_disk_points(samples, seed, rmax=0.95)
    vals = np.abs(np.asarray(f.eval(z)))
    if np.any(vals >= 1.0):
        raise ValueError("range violation: |f| must stay below 1 on the disk")
    dz, dzbar = wirtinger_moduli(f, z)
    records = []
    for i in range(samples):
        za = float(np.abs(z[i]))
        lhs = float(dz[i] + dzbar[i])
        rhs = (4.0 / math.pi) / (1.0 - za * za)
        records.append(VerificationRecord.check(
            inputs={"z_re": float(z[i].real), "z_im": float(z[i].imag)},
            lhs=lhs, rhs=rhs, slack=slack))
    return records


# ---------------------------------------------------------------------------
# seeded boundary data
# ---------------------------------------------------------------------------

class TrigPolynomial:
    """Real or complex trigonometric polynomial c0 + sum_k a_k cos k th + b_k sin k th."""

    def __init__(self, c0, cos_coeffs, sin_coeffs):
        self.c0 = c0
        self.cos_coeffs = np.asarray(cos_coeffs)
        self.sin_coeffs = np.asarray(sin_coeffs)

    def __call__(self, theta):
        th = np.asarray(theta, dtype=float)
        k = np.arange(1, len(self.cos_coeffs) + 1)
        vals = self.c0 + np.cos(np.multiply.outer(th, k)) @ self.cos_coeffs \
            + np.sin(np.multiply.outer(th, k)) @ self.sin_coeffs
        return vals

    def sup(self, grid: int = 4096) -> float:
        theta = np.linspace(-math.pi, math.pi, grid, endpoint=False)
        return float(np.max(np.abs(self(theta))))

    def scaled(self, factor):
        return TrigPolynomial(self.c0 * factor, self.cos_coeffs * factor,
                              self.sin_coeffs * factor)


def _random_trig(rng: np.random.Generator, degree: int, complex_valued: bool,
                 zero_mean: bool) -> TrigPolynomial:
    k = np.arange(1, degree + 1)
    decay = 1.0 / (1.0 + k) ** 2
    if complex_valued:
        c0 = 0j if zero_mean else complex(rng.normal(), rng.normal())
        a = (rng.normal(size=degree) + 1j * rng.normal(size=degree)) * decay
        b = (rng.normal(size=degree) + 1j * rng.normal(size=degree)) * decay
    else:
        c0 = 0.0 if zero_mean else rng.normal()
        a = rng.normal(size=degree) * decay
        b = rng.normal(size=degree) * decay
    return TrigPolynomial(c0, a, b)


def random_bounded_function(seed: int, disk: DiskSpec = UNIT_DISK, degree: int = 4,
                            complex_valued: bool = False, zero_mean: bool = False,
                            fill: float = 0.95, nodes: int = 1024) -> BoundaryData:
    """Seeded harmonic function with sup|boundary data| = fill * disk.bound.

    ``zero_mean`` drops the constant Fourier term so the extension vanishes at
    the center (the Heinz-bound configuration).
    """
    rng = np.random.default_rng(seed)
    poly = _random_trig(rng, degree, complex_valued, zero_mean)
    sup = poly.sup()
    if sup == 0.0:
        poly = TrigPolynomial(poly.c0, np.ones(1), np.zeros(1))
        sup = poly.sup()
    return BoundaryData(poly.scaled(fill * disk.bound / sup), disk, nodes=nodes)


def random_positive_function(seed: int, disk: DiskSpec = UNIT_DISK, degree: int = 4,
                             low: float = 0.2, nodes: int = 1024) -> BoundaryData:
    """Seeded positive harmonic function (boundary data shifted above ``low``)."""
    rng = np.random.default_rng(seed)
    poly = _random_trig(rng, degree, complex_valued=False, zero_mean=False)
    theta = np.linspace(-math.pi, math.pi, 4096, endpoint=False)
    shift = float(np.min(poly(theta)))
    lifted = TrigPolynomial(poly.c0 - shift + low, poly.cos_coeffs, poly.sin_coeffs)
    return BoundaryData(lifted, disk, nodes=nodes)
