"""Planar and n-dimensional domains with exact boundary-distance oracles.

Every domain G here is an open proper subdomain of R^n and exposes

    d_G(x) = inf{ |x - w| : w on the boundary of G },

the Euclidean distance to the boundary, in closed form:

    unit ball        d(x) = 1 - |x|
    half-space       d(x) = x_n            (x_n > 0)
    disk B(a, R)     d(x) = R - |x - a|
    punctured plane  d(x) = |x|            (R^2 minus the origin)
    slit plane       d(x) = distance to the ray {(t, 0) : t >= 0}

Boundary points count as exterior everywhere: the metrics built on top of
these oracles are only defined on open sets.  Unbounded domains need an
explicit axis-aligned sampling box before random sweeps can be run on them.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Domain",
    "UnitBall",
    "HalfSpace",
    "Disk",
    "PuncturedPlane",
    "SlitPlane",
    "GenericDomain",
    "ExteriorPointError",
    "parse_domain",
]


class ExteriorPointError(ValueError):
    """Raised when a point is on the boundary of, or outside, a domain."""


def _as_point(x, dim: int | None = None) -> np.ndarray:
    p = np.asarray(x, dtype=float)
    if p.ndim != 1:
        raise ValueError(f"a point must be a flat coordinate sequence, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point coordinates must be finite")
    if dim is not None and p.shape[0] != dim:
        raise ValueError(f"dimension mismatch: point has dimension {p.shape[0]}, domain has {dim}")
    return p


class Domain:
    """Base class: a domain is its dimension plus a boundary-distance oracle.

    Subclasses implement ``boundary_distances`` (vectorized, unchecked: it may
    return values <= 0 for exterior points) and may override the sampling box
    and the natural bounding box used to clip geodesic grids.
    """

    dim: int
    name: str = "domain"
    #: geodesic grids must include a neighborhood of the origin (slit/punctured plane)
    grid_needs_origin: bool = False

    def __init__(self, dim: int, sampling_box=None):
        if dim < 2:
            raise ValueError("domains require dimension n >= 2")
        self.dim = int(dim)
        self._sampling_box = None
        if sampling_box is not None:
            lo, hi = sampling_box
            lo = _as_point(lo, self.dim)
            hi = _as_point(hi, self.dim)
            if np.any(hi <= lo):
                raise ValueError("sampling box must have positive extent on every axis")
            self._sampling_box = (lo, hi)

    # -- oracle ------------------------------------------------------------

    def boundary_distances(self, pts: np.ndarray) -> np.ndarray:
        """Signed-by-convention distances for an (m, n) array; no interiority check."""
        raise NotImplementedError

    def dist_to_boundary(self, x) -> float:
        p = _as_point(x, self.dim)
        d = float(self.boundary_distances(p[None, :])[0])
        if d <= 0.0:
            raise ExteriorPointError(f"exterior point: {p.tolist()} is not interior to {self.name}")
        return d

    def contains(self, x) -> bool:
        p = _as_point(x, self.dim)
        return bool(self.boundary_distances(p[None, :])[0] > 0.0)

    # -- sampling ----------------------------------------------------------

    @property
    def sampling_box(self):
        """(lo, hi) box that candidate sample points are drawn from."""
        return self._sampling_box

    def _margin_scale(self) -> float:
        """Length scale that the sampling margin is relative to."""
        if self._sampling_box is not None:
            lo, hi = self._sampling_box
            return float(np.min(hi - lo))
        return 1.0

    def sample_interior(self, count: int, seed: int, margin: float = 0.01) -> np.ndarray:
        """Seed-reproducible interior points with d_G >= margin * local scale.

        Rejection sampling from the sampling box; raises if the box is missing
        (unbounded domains) or if no acceptable point exists.
        """
        if count < 1:
            raise ValueError("count must be >= 1")
        if not 0.0 < margin < 1.0:
            raise ValueError("margin must lie in (0, 1)")
        box = self.sampling_box
        if box is None:
            raise ValueError(f"{self.name}: a sampling box must be configured for random sweeps")
        lo, hi = box
        cutoff = margin * self._margin_scale()
        rng = np.random.default_rng(seed)
        out = []
        have = 0
        for _ in range(1000):
            cand = rng.uniform(lo, hi, size=(max(4 * count, 64), self.dim))
            good = cand[self.boundary_distances(cand) >= cutoff]
            if len(good):
                out.append(good)
                have += len(good)
            if have >= count:
                break
        else:
            raise ValueError(f"{self.name}: empty sample region (margin {margin} too large?)")
        return np.concatenate(out)[:count]

    # -- geometry hints for the geodesic grid -------------------------------

    def natural_bounds(self):
        """(lo, hi) box that certainly contains the domain, or None if unbounded."""
        return None

    def __repr__(self):  # pragma: no cover - debugging nicety
        return f"{type(self).__name__}(dim={self.dim})"


class UnitBall(Domain):
    """Open unit ball B^n centered at the origin; d(x) = 1 - |x|."""

    def __init__(self, dim: int = 2):
        super().__init__(dim)
        self.name = f"ball:n={dim}"
        self._sampling_box = (-np.ones(dim), np.ones(dim))

    def boundary_distances(self, pts):
        return 1.0 - np.linalg.norm(pts, axis=1)

    def _margin_scale(self):
        return 1.0

    def natural_bounds(self):
        return -np.ones(self.dim), np.ones(self.dim)


class HalfSpace(Domain):
    """Upper half-space {x : x_n > 0}; d(x) = x_n."""

    def __init__(self, dim: int = 2, sampling_box=None):
        super().__init__(dim, sampling_box)
        self.name = f"halfspace:n={dim}"

    def boundary_distances(self, pts):
        return pts[:, -1].copy()

    def natural_bounds(self):
        lo = np.full(self.dim, -np.inf)
        hi = np.full(self.dim, np.inf)
        lo[-1] = 0.0
        return lo, hi


class Disk(Domain):
    """Open disk/ball B(a, R); d(x) = R - |x - a|."""

    def __init__(self, center, radius: float):
        center = _as_point(center)
        if radius <= 0:
            raise ValueError("disk radius must be positive")
        super().__init__(len(center))
        self.center = center
        self.radius = float(radius)
        self.name = f"disk:a={','.join(map(str, center.tolist()))};R={radius}"
        self._sampling_box = (center - radius, center + radius)

    def boundary_distances(self, pts):
        return self.radius - np.linalg.norm(pts - self.center, axis=1)

    def _margin_scale(self):
        return self.radius

    def natural_bounds(self):
        return self.center - self.radius, self.center + self.radius


class PuncturedPlane(Domain):
    """R^2 with the origin removed; d(x) = |x|."""

    grid_needs_origin = True

    def __init__(self, sampling_box=None):
        super().__init__(2, sampling_box)
        self.name = "punctured-plane"

    def boundary_distances(self, pts):
        return np.linalg.norm(pts, axis=1)


class SlitPlane(Domain):
    """R^2 minus the closed ray {(t, 0) : t >= 0}.

    d(x) = |x| left of the origin, |x_2| above/below the slit.
    """

    grid_needs_origin = True

    def __init__(self, sampling_box=None):
        super().__init__(2, sampling_box)
        self.name = "slit-plane"

    def boundary_distances(self, pts):
        return np.where(pts[:, 0] <= 0.0, np.linalg.norm(pts, axis=1), np.abs(pts[:, 1]))


class GenericDomain(Domain):
    """Domain given by a user-supplied distance oracle (and optional membership test)."""

    def __init__(self, dim: int, distance_fn, contains_fn=None, sampling_box=None,
                 name: str = "generic", needs_origin: bool = False):
        super().__init__(dim, sampling_box)
        self._distance_fn = distance_fn
        self._contains_fn = contains_fn
        self.name = name
        self.grid_needs_origin = bool(needs_origin)

    def boundary_distances(self, pts):
        d = np.asarray(self._distance_fn(np.asarray(pts, dtype=float)), dtype=float)
        if d.shape != (len(pts),):
            raise ValueError("distance oracle must map (m, n) points to (m,) distances")
        return d

    def contains(self, x):
        p = _as_point(x, self.dim)
        if self._contains_fn is not None:
            return bool(self._contains_fn(p))
        return super().contains(x)


# -- CLI literals -----------------------------------------------------------

_DEFAULT_UNBOUNDED_BOX = 4.0


def parse_domain(text: str) -> Domain:
    """Parse a domain literal.

    Grammar (key=value fields separated by ';' after the kind):

        ball:n=2
        halfspace:n=3
        disk:a=0,0;R=2
        punctured-plane
        slit-plane

    Any kind accepts an optional ``box=lo1,..,lon,hi1,..,hin`` field that sets
    the sampling box.  Unbounded kinds get a default box (|x_i| <= 4, and
    x_n in (0, 8] for the half-space) so that seeded sweeps work out of the box.
    """
    text = text.strip()
    kind, _, rest = text.partition(":")
    fields: dict[str, str] = {}
    if rest:
        for part in rest.split(";"):
            if not part:
                continue
            key, eq, val = part.partition("=")
            if not eq:
                raise ValueError(f"malformed domain field {part!r} in {text!r}")
            fields[key.strip()] = val.strip()

    def parse_box(dim):
        if "box" not in fields:
            return None
        vals = [float(v) for v in fields["box"].split(",")]
        if len(vals) != 2 * dim:
            raise ValueError(f"box needs {2 * dim} numbers for dimension {dim}")
        return np.array(vals[:dim]), np.array(vals[dim:])

    if kind == "ball":
        n = int(fields.get("n", 2))
        return UnitBall(n)
    if kind == "halfspace":
        n = int(fields.get("n", 2))
        box = parse_box(n)
        if box is None:
            lo = np.full(n, -_DEFAULT_UNBOUNDED_BOX)
            hi = np.full(n, _DEFAULT_UNBOUNDED_BOX)
            lo[-1] = 0.0
            hi[-1] = 2 * _DEFAULT_UNBOUNDED_BOX
            box = (lo, hi)
        return HalfSpace(n, sampling_box=box)
    if kind == "disk":
        if "a" not in fields or "R" not in fields:
            raise ValueError("disk literal needs a=center;R=radius")
        center = [float(v) for v in fields["a"].split(",")]
        return Disk(center, float(fields["R"]))
    if kind == "punctured-plane":
        box = parse_box(2)
        if box is None:
            box = (np.full(2, -_DEFAULT_UNBOUNDED_BOX), np.full(2, _DEFAULT_UNBOUNDED_BOX))
        return PuncturedPlane(sampling_box=box)
    if kind == "slit-plane":
        box = parse_box(2)
        if box is None:
            box = (np.full(2, -_DEFAULT_UNBOUNDED_BOX), np.full(2, _DEFAULT_UNBOUNDED_BOX))
        return SlitPlane(sampling_box=box)
    raise ValueError(f"unknown domain literal {text!r}")
