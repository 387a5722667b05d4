"""Hyperbolic-type metrics and a numerical quasihyperbolic geodesic solver.

Closed forms on the two model domains:

    sh^2( rho_B(x,y) / 2 ) = |x-y|^2 / ((1-|x|^2)(1-|y|^2))      (unit ball)
    ch  ( rho_H(x,y) )     = 1 + |x-y|^2 / (2 x_n y_n)           (half-space)

and on any proper subdomain the distance-ratio metric

    j_G(x,y) = log(1 + |x-y| / min(d_G(x), d_G(y))).

The quasihyperbolic distance k_G(x,y) is the infimum over curves of the
arclength integral of 1/d_G.  It is lower-bounded by |log(d(x)/d(y))| and by
log(1 + |x-y|/d(x)); on the half-space k = rho, and on the ball
k <= rho <= 2k.

``quasihyperbolic`` computes an upper-bound approximation: a grid graph over
a box around the endpoints (nodes clamped to d_G > half a cell), edge weights
by adaptive Simpson quadrature of 1/d_G along straight segments, Dijkstra
shortest path, then coarse-to-fine polyline refinement with per-vertex
golden-section searches along the perpendicular of the two neighbors.  The
returned length is the quasihyperbolic length of an explicit polyline inside
the domain, hence always >= k_G up to quadrature tolerance, and it converges
to k_G from above as the resolution grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .domains import Domain, ExteriorPointError, UnitBall, HalfSpace, _as_point

__all__ = [
    "GeodesicPath",
    "PathNotFoundError",
    "rho_ball",
    "rho_halfspace",
    "j_metric",
    "k_lower_bound_logratio",
    "k_lower_bound_log1p",
    "quasihyperbolic",
    "uniformity_ratio",
]

QUAD_TOL = 1e-9           # absolute adaptive-Simpson tolerance per segment
DEFAULT_RESOLUTION = 128  # grid cells along the longest box side


class PathNotFoundError(RuntimeError):
    """The grid graph is disconnected at this resolution; increase resolution."""


@dataclass(frozen=True)
class GeodesicPath:
    """Polyline inside the domain together with its quasihyperbolic length."""

    vertices: np.ndarray  # (m, n) interior points
    length: float


# ---------------------------------------------------------------------------
# closed-form metrics
# ---------------------------------------------------------------------------

def rho_ball(x, y) -> float:
    """Hyperbolic distance in the unit ball B^n."""
    p = _as_point(x)
    q = _as_point(y, len(p))
    px, qx = float(p @ p), float(q @ q)
    if px >= 1.0 or qx >= 1.0:
        raise ExteriorPointError("rho_ball requires |x| < 1 and |y| < 1")
    d2 = float((p - q) @ (p - q))
    return 2.0 * math.asinh(math.sqrt(d2 / ((1.0 - px) * (1.0 - qx))))


def rho_halfspace(x, y) -> float:
    """Hyperbolic distance in the half-space H^n = {x_n > 0}.

    Evaluated as 2 asinh(|x-y| / (2 sqrt(x_n y_n))), which equals
    arccosh(1 + |x-y|^2/(2 x_n y_n)) but stays accurate for nearby points.
    """
    p = _as_point(x)
    q = _as_point(y, len(p))
    if p[-1] <= 0.0 or q[-1] <= 0.0:
        raise ExteriorPointError("rho_halfspace requires x_n > 0 and y_n > 0")
    sep = float(np.linalg.norm(p - q))
    return 2.0 * math.asinh(sep / (2.0 * math.sqrt(p[-1] * q[-1])))


def j_metric(domain: Domain, x, y) -> float:
    """Distance-ratio metric j_G(x,y) = log(1 + |x-y| / min(d(x), d(y)))."""
    p = _as_point(x, domain.dim)
    q = _as_point(y, domain.dim)
    dmin = min(domain.dist_to_boundary(p), domain.dist_to_boundary(q))
    return math.log1p(float(np.linalg.norm(p - q)) / dmin)


def k_lower_bound_logratio(domain: Domain, x, y) -> float:
    """Sharp lower bound k_G(x,y) >= |log(d(x)/d(y))|."""
    return abs(math.log(domain.dist_to_boundary(x) / domain.dist_to_boundary(y)))


def k_lower_bound_log1p(domain: Domain, x, y) -> float:
    """Sharp lower bound k_G(x,y) >= log(1 + |x-y|/d(x)).  Not symmetric."""
    p = _as_point(x, domain.dim)
    q = _as_point(y, domain.dim)
    return math.log1p(float(np.linalg.norm(p - q)) / domain.dist_to_boundary(p))


# ---------------------------------------------------------------------------
# batch quadrature of 1/d along straight segments
# ---------------------------------------------------------------------------

def _inv(d: np.ndarray) -> np.ndarray:
    return np.where(d > 0.0, 1.0 / np.where(d > 0.0, d, 1.0), np.inf)


def _segment_integrals(dist, A: np.ndarray, B: np.ndarray, tol: float = QUAD_TOL,
                       max_depth: int = 22) -> np.ndarray:
    """Adaptive-Simpson integrals of 1/dist over segments A[i] -> B[i].

    All segments are refined in lockstep (arrays of active subintervals), so a
    batch costs a handful of vectorized distance evaluations.  Segments that
    leave the domain (dist <= 0 anywhere) come back as +inf.
    """
    m = len(A)
    total = np.zeros(m)
    AB = B - A
    L = np.linalg.norm(AB, axis=1)

    idx = np.arange(m)
    t0 = np.zeros(m)
    t1 = np.ones(m)
    f0 = _inv(dist(A))
    fm = _inv(dist(A + 0.5 * AB))
    f1 = _inv(dist(B))
    S = (t1 - t0) / 6.0 * (f0 + 4.0 * fm + f1)
    tl = np.full(m, tol)

    for _ in range(max_depth):
        if not len(idx):
            break
        tm = 0.5 * (t0 + t1)
        ta = 0.5 * (t0 + tm)
        tb = 0.5 * (tm + t1)
        fa = _inv(dist(A[idx] + ta[:, None] * AB[idx]))
        fb = _inv(dist(A[idx] + tb[:, None] * AB[idx]))
        Sl = (tm - t0) / 6.0 * (f0 + 4.0 * fa + fm)
        Sr = (t1 - tm) / 6.0 * (fm + 4.0 * fb + f1)
        S2 = Sl + Sr
        err = S2 - S
        with np.errstate(invalid="ignore"):
            done = np.abs(err) <= 15.0 * tl
        done |= ~np.isfinite(S2)
        if done.any():
            contrib = S2 + err / 15.0
            finite = np.isfinite(contrib)
            total += np.bincount(idx[done], np.where(finite, contrib, 0.0)[done], minlength=m)
            hopeless = done & ~finite
            if hopeless.any():
                total[idx[hopeless]] = np.inf
        keep = ~done
        idx = np.concatenate([idx[keep], idx[keep]])
        t0, t1 = np.concatenate([t0[keep], tm[keep]]), np.concatenate([tm[keep], t1[keep]])
        f0, fm, f1, S = (
            np.concatenate([f0[keep], fm[keep]]),
            np.concatenate([fa[keep], fb[keep]]),
            np.concatenate([fm[keep], f1[keep]]),
            np.concatenate([Sl[keep], Sr[keep]]),
        )
        tl = np.concatenate([0.5 * tl[keep], 0.5 * tl[keep]])
    if len(idx):
        finite = np.isfinite(S)
        total += np.bincount(idx, np.where(finite, S, 0.0), minlength=m)
        if (~finite).any():
            total[idx[~finite]] = np.inf
    return total * L


def _segment_quick(dist, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Single-shot 5-point Simpson with Richardson correction (line-search fast path)."""
    AB = B - A
    L = np.linalg.norm(AB, axis=1)
    f0 = _inv(dist(A))
    fq = _inv(dist(A + 0.25 * AB))
    fm = _inv(dist(A + 0.5 * AB))
    ft = _inv(dist(A + 0.75 * AB))
    f1 = _inv(dist(B))
    S1 = (f0 + 4.0 * fm + f1) / 6.0
    S2 = (f0 + 4.0 * fq + 2.0 * fm + 4.0 * ft + f1) / 12.0
    return (S2 + (S2 - S1) / 15.0) * L


def _polyline_length(dist, V: np.ndarray) -> float:
    return float(_segment_integrals(dist, V[:-1], V[1:]).sum())


# ---------------------------------------------------------------------------
# polyline refinement: coarse-to-fine per-vertex golden-section descent
# ---------------------------------------------------------------------------

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _sweep(dist, V: np.ndarray, radius: float, gs_iters: int = 10) -> np.ndarray:
    """One red-black sweep: move every interior vertex along the perpendicular
    of its neighbor chord, accepting only strict improvements."""
    for parity in (1, 0):
        ii = np.arange(1, len(V) - 1)
        ii = ii[ii % 2 == parity]
        if not len(ii):
            continue
        P = V[ii - 1]
        Q = V[ii + 1]
        C = V[ii]
        chord = Q - P
        nrm = np.linalg.norm(chord, axis=1)
        ok = nrm > 1e-30
        N = np.zeros_like(chord)
        N[ok] = np.column_stack([-chord[ok, 1], chord[ok, 0]]) / nrm[ok, None]
        PQ = np.vstack([P, Q])
        k = len(ii)

        def cost(tvals):
            pos = C + tvals[:, None] * N
            vals = _segment_quick(dist, PQ, np.vstack([pos, pos]))
            return vals[:k] + vals[k:]

        lo = np.full(k, -radius)
        hi = np.full(k, radius)
        for _ in range(gs_iters):
            c1 = hi - _INVPHI * (hi - lo)
            c2 = lo + _INVPHI * (hi - lo)
            better = cost(c1) < cost(c2)
            hi = np.where(better, c2, hi)
            lo = np.where(better, lo, c1)
        tbest = 0.5 * (lo + hi)
        fbest = cost(tbest)
        fbase = cost(np.zeros(k))
        accept = fbest < fbase
        V[ii[accept]] = C[accept] + tbest[accept][:, None] * N[accept]
    return V


def _refine_polyline(dist, V: np.ndarray, h: float,
                     max_vertices: int = 1025) -> tuple[np.ndarray, float]:
    """Coarsen the Dijkstra polyline, then alternately relax and subdivide.

    Flat per-vertex sweeps damp smooth path deformations at O(1/m^2) per sweep
    and stall; relaxing a decimated polyline first moves the large-scale shape
    in a few sweeps, after which midpoint subdivision restores resolution.  The
    per-level convergence threshold scales with the squared vertex spacing so
    the final accuracy tracks the grid cell size h.
    """
    # coarsen while the decimated polyline stays strictly inside the domain
    while len(V) > 5:
        keep = np.arange(0, len(V), 2)
        if keep[-1] != len(V) - 1:
            keep = np.append(keep, len(V) - 1)
        W = V[keep]
        if not math.isfinite(_polyline_length(dist, W)):
            break
        V = W
    total = _polyline_length(dist, V)
    while True:
        seg = np.linalg.norm(V[1:] - V[:-1], axis=1)
        euclid = float(seg.sum())
        radius = max(0.75 * float(seg.mean()), 0.51 * h)
        tau = min(1e-6, max(1e-9, 2e-3 * max(total, 1e-30) * (seg.mean() / max(euclid, 1e-30)) ** 2))
        for _ in range(16):
            prev = total
            V = _sweep(dist, V, radius)
            total = _polyline_length(dist, V)
            if prev - total < tau:
                break
        seg = np.linalg.norm(V[1:] - V[:-1], axis=1)
        if (len(V) >= 5 and seg.max() <= 1.5 * h) or 2 * len(V) - 1 > max_vertices:
            break
        mid = 0.5 * (V[:-1] + V[1:])
        W = np.empty((2 * len(V) - 1, V.shape[1]))
        W[0::2] = V
        W[1::2] = mid
        V = W
        total = _polyline_length(dist, V)
    return V, total


# ---------------------------------------------------------------------------
# grid graph construction + shortest path
# ---------------------------------------------------------------------------

def _grid_box(domain: Domain, p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Axis-aligned box the grid lives on: the endpoint bounding box padded by
    half the separation per side, forced to cover the origin for slit/punctured
    domains (their geodesics may have to round the origin), then clipped to the
    natural bounds and the sampling box."""
    sep = float(np.linalg.norm(p - q))
    pad = 0.5 * max(sep, 1e-9)
    lo = np.minimum(p, q) - pad
    hi = np.maximum(p, q) + pad
    if domain.grid_needs_origin:
        scale = max(float(np.linalg.norm(p)), float(np.linalg.norm(q)), sep)
        lo = np.minimum(lo, -0.35 * scale * np.ones_like(lo))
        hi = np.maximum(hi, 0.35 * scale * np.ones_like(hi))
    nat = domain.natural_bounds()
    if nat is not None:
        lo = np.maximum(lo, nat[0])
        hi = np.minimum(hi, nat[1])
    if domain.sampling_box is not None:
        blo, bhi = domain.sampling_box
        lo = np.maximum(lo, np.minimum(blo, np.minimum(p, q)))
        hi = np.minimum(hi, np.maximum(bhi, np.maximum(p, q)))
    return lo, hi


def _solve_planar(domain: Domain, p: np.ndarray, q: np.ndarray,
                  resolution: int) -> tuple[float, GeodesicPath]:
    dist = domain.boundary_distances
    lo, hi = _grid_box(domain, p, q)
    size = hi - lo
    h = float(size.max()) / resolution
    ns = np.maximum(2, np.round(size / h).astype(int) + 1)
    nx, ny = int(ns[0]), int(ns[1])
    gx = np.linspace(lo[0], hi[0], nx)
    gy = np.linspace(lo[1], hi[1], ny)
    GX, GY = np.meshgrid(gx, gy, indexing="ij")
    pts = np.column_stack([GX.ravel(), GY.ravel()])
    keep = dist(pts) > 0.5 * h
    kept_idx = np.full(len(pts), -1, dtype=np.int64)
    kept_idx[keep] = np.arange(int(keep.sum()))
    nkept = int(keep.sum())
    nodes = np.vstack([pts[keep], p[None], q[None]])
    src, dst = nkept, nkept + 1

    ea, eb = [], []
    lin = np.arange(nx * ny).reshape(nx, ny)
    for di, dj in ((1, 0), (0, 1), (1, 1), (1, -1)):
        i0 = np.arange(max(0, -di), nx - max(0, di))
        j0 = np.arange(max(0, -dj), ny - max(0, dj))
        ii, jj = np.meshgrid(i0, j0, indexing="ij")
        a = kept_idx[lin[ii, jj].ravel()]
        b = kept_idx[lin[ii + di, jj + dj].ravel()]
        mask = (a >= 0) & (b >= 0)
        ea.append(a[mask])
        eb.append(b[mask])
    # connect the endpoints to every kept node in their neighborhood
    for node_id, point in ((src, p), (dst, q)):
        near = np.where(np.linalg.norm(nodes[:nkept] - point, axis=1) <= 2.1 * h)[0]
        ea.append(near)
        eb.append(np.full(len(near), node_id, dtype=np.int64))
    if float(np.linalg.norm(p - q)) <= 2.1 * h:
        ea.append(np.array([src]))
        eb.append(np.array([dst]))
    ea = np.concatenate(ea)
    eb = np.concatenate(eb)

    A, B = nodes[ea], nodes[eb]
    AB = B - A
    # exclude grid edges that pass within half a cell of the boundary
    dmin = np.minimum.reduce([dist(A), dist(A + 0.25 * AB), dist(A + 0.5 * AB),
                              dist(A + 0.75 * AB), dist(B)])
    W = _segment_integrals(dist, A, B)
    endpoint_edge = (ea >= nkept) | (eb >= nkept)
    valid = np.isfinite(W) & ((dmin > 0.5 * h) | (endpoint_edge & (dmin > 0.0)))
    ea, eb, W = ea[valid], eb[valid], np.maximum(W[valid], 1e-300)

    graph = csr_matrix((W, (ea, eb)), shape=(len(nodes), len(nodes)))
    dists, pred = dijkstra(graph, directed=False, indices=[src], return_predecessors=True)
    if not math.isfinite(dists[0, dst]):
        raise PathNotFoundError(
            f"no quasihyperbolic path found on a {nx}x{ny} grid: increase resolution")
    order = [dst]
    while order[-1] != src:
        order.append(int(pred[0, order[-1]]))
    V = nodes[np.array(order[::-1])]
    V, total = _refine_polyline(dist, V, h)
    return total, GeodesicPath(vertices=V, length=total)


def _halfspace_geodesic(p: np.ndarray, q: np.ndarray, samples: int = 1024) -> np.ndarray:
    """Sample the hyperbolic geodesic of H^n between p and q (n >= 2)."""
    u, xh = p[:-1], float(p[-1])
    v, yh = q[:-1], float(q[-1])
    w = float(np.linalg.norm(v - u))
    if w < 1e-14:
        heights = np.exp(np.linspace(math.log(xh), math.log(yh), samples + 1))
        pts = np.repeat(p[None, :], samples + 1, axis=0)
        pts[:, -1] = heights
        return pts
    e = (v - u) / w
    c = (w * w + yh * yh - xh * xh) / (2.0 * w)
    radius = math.hypot(c, xh)
    th_p = math.atan2(xh, -c)
    th_q = math.atan2(yh, w - c)
    th = np.linspace(th_p, th_q, samples + 1)
    s = c + radius * np.cos(th)
    z = radius * np.sin(th)
    return u[None, :] + s[:, None] * e[None, :] + z[:, None] * np.eye(len(p))[-1][None, :]


def quasihyperbolic(domain: Domain, x, y,
                    resolution: int = DEFAULT_RESOLUTION) -> tuple[float, GeodesicPath]:
    """Upper-bound approximation of the quasihyperbolic distance k_G(x, y).

    Planar domains run the grid-graph solver described in the module
    docstring.  In dimension n >= 3 only two configurations are supported:
    the half-space (where k = rho, evaluated by quadrature along the known
    hyperbolic geodesic) and radial pairs in the unit ball (1-D quadrature
    along the straight segment); everything else raises NotImplementedError.
    """
    p = _as_point(x, domain.dim)
    q = _as_point(y, domain.dim)
    if not domain.contains(p) or not domain.contains(q):
        raise ExteriorPointError("quasihyperbolic endpoints must be interior points")
    if resolution < 4:
        raise ValueError("resolution must be at least 4")
    if float(np.linalg.norm(p - q)) == 0.0:
        return 0.0, GeodesicPath(vertices=p[None, :].copy(), length=0.0)

    if domain.dim == 2:
        return _solve_planar(domain, p, q, resolution)

    dist = domain.boundary_distances
    if isinstance(domain, HalfSpace):
        V = _halfspace_geodesic(p, q)
        total = _polyline_length(dist, V)
        return total, GeodesicPath(vertices=V, length=total)
    if isinstance(domain, UnitBall):
        np_, nq = float(np.linalg.norm(p)), float(np.linalg.norm(q))
        radial = (np_ < 1e-14 or nq < 1e-14
                  or abs(float(p @ q) - np_ * nq) <= 1e-12 * max(np_ * nq, 1e-30))
        if radial:
            ts = np.linspace(0.0, 1.0, 1025)
            V = p[None, :] + ts[:, None] * (q - p)[None, :]
            total = _polyline_length(dist, V)
            return total, GeodesicPath(vertices=V, length=total)
        raise NotImplementedError(
            "quasihyperbolic in the ball for n >= 3 is only supported for radial pairs")
    raise NotImplementedError(
        "quasihyperbolic in dimension >= 3 is only supported on the half-space "
        "and for radial pairs in the unit ball")


def uniformity_ratio(domain: Domain, samples: int = 200, seed: int = 0,
                     resolution: int = 64, margin: float = 0.02) -> float:
    """Empirical uniformity constant: max over sampled pairs of k_G / j_G.

    Coincident pairs are skipped.  For the unit ball and the half-space the
    result must stay below 2 plus the solver's grid error.
    """
    pts = domain.sample_interior(2 * samples, seed=seed, margin=margin)
    worst = 0.0
    for i in range(samples):
        p, q = pts[2 * i], pts[2 * i + 1]
        if float(np.linalg.norm(p - q)) < 1e-9:
            continue
        k, _ = quasihyperbolic(domain, p, q, resolution=resolution)
        worst = max(worst, k / j_metric(domain, p, q))
    return worst
