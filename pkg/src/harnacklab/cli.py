"""Command-line front end: compute metrics and run seeded verification sweeps.

Subcommands
-----------
metric            evaluate rho / j / k / the k lower bounds at a pair of points
geodesic          quasihyperbolic value plus the approximating polyline
specfun           evaluate the special functions at given arguments
harnack-verify    seeded Harnack-inequality sweeps on a domain
schwarz-verify    seeded sweeps of the centered Schwarz bound on the disk
gradient-verify   seeded sweeps of the sharp gradient bounds on the disk
counterexample    the connected-boundary counterexample table

Reports are CSV by default (``#``-prefixed config echo, then rows, then a
``# checked=N passed=M max_violation=V`` trailer) or JSON with the same
content.  Identical configuration implies byte-identical output.  Exit codes:
0 all checks passed, 1 verification failures, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import harmonic, harnack, metrics
from .domains import ExteriorPointError, HalfSpace, SlitPlane, UnitBall, parse_domain
from .records import VerificationRecord, format_float, summarize
from .specfun import c_of_k, elliptic_k, elliptic_k_series, mu, mu_inverse, phi_k, \
    sphere_surface_area

__all__ = ["main", "build_parser"]


def _parse_point(text: str) -> np.ndarray:
    try:
        return np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError as exc:
        raise ValueError(f"malformed point {text!r} (expected e.g. 0.5,0)") from exc


def _config_echo(args, command: str, extra: dict | None = None) -> dict:
    cfg = {"command": command}
    for key in ("domain", "kind", "function", "bound", "s", "samples", "seed",
                "tolerance", "resolution", "functions", "centers", "pmax",
                "alpha", "beta", "cn", "b", "A", "KI", "output"):
        if hasattr(args, key) and getattr(args, key) is not None:
            cfg[key] = getattr(args, key)
    if extra:
        cfg.update(extra)
    return cfg


def _emit_report(records: list[VerificationRecord], columns: list[str],
                 config: dict, fmt: str) -> int:
    summary = summarize(records)
    if fmt == "json":
        payload = {
            "config": config,
            "records": [
                {**r.inputs, "lhs": r.lhs, "rhs": r.rhs, "margin": r.margin,
                 "pass": r.passed, "slack": r.slack}
                for r in records
            ],
            "summary": summary,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for key, val in config.items():
            print(f"# {key}={val}")
        print(",".join(columns))
        for r in records:
            row = []
            for col in columns:
                if col == "lhs":
                    row.append(format_float(r.lhs))
                elif col == "rhs":
                    row.append(format_float(r.rhs))
                elif col == "margin":
                    row.append(format_float(r.margin))
                elif col == "pass":
                    row.append("true" if r.passed else "false")
                else:
                    val = r.inputs.get(col, "")
                    row.append(format_float(val) if isinstance(val, float) else str(val))
            print(",".join(row))
        print(f"# checked={summary['checked']} passed={summary['passed']} "
              f"max_violation={format_float(summary['max_violation'])}")
    return 0 if summary["passed"] == summary["checked"] else 1


def _distortion_params(args) -> harnack.DistortionParams:
    return harnack.DistortionParams(K=args.K, K_I=args.KI, A=args.A,
                                    c_n=args.cn, b=args.b)


# ---------------------------------------------------------------------------
# metric / geodesic / specfun
# ---------------------------------------------------------------------------

def _cmd_metric(args, include_path: bool = False) -> int:
    domain = parse_domain(args.domain)
    x = _parse_point(args.x)
    y = _parse_point(args.y)
    diagnostics: dict = {"domain": domain.name}
    path_payload = None
    if args.kind == "rho":
        if isinstance(domain, UnitBall):
            value = metrics.rho_ball(x, y)
        elif isinstance(domain, HalfSpace):
            value = metrics.rho_halfspace(x, y)
        else:
            raise ValueError("rho has a closed form only on ball:n=... and halfspace:n=...")
    elif args.kind == "j":
        value = metrics.j_metric(domain, x, y)
    elif args.kind == "k":
        value, path = metrics.quasihyperbolic(domain, x, y, resolution=args.resolution)
        diagnostics["resolution"] = args.resolution
        diagnostics["path_vertices"] = int(len(path.vertices))
        if include_path:
            path_payload = [[float(c) for c in v] for v in path.vertices]
    elif args.kind == "bounds":
        value = {
            "k_lower_bound_logratio": metrics.k_lower_bound_logratio(domain, x, y),
            "k_lower_bound_log1p": metrics.k_lower_bound_log1p(domain, x, y),
        }
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown metric kind {args.kind!r}")
    payload = {"value": value, "diagnostics": diagnostics}
    if path_payload is not None:
        payload["path"] = path_payload
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_geodesic(args) -> int:
    args.kind = "k"
    return _cmd_metric(args, include_path=True)


_SPECFUN_TABLE = {
    "elliptic-k": (1, lambda a: elliptic_k(a[0])),
    "elliptic-k-series": (1, lambda a: elliptic_k_series(a[0])),
    "mu": (1, lambda a: mu(a[0])),
    "mu-inverse": (1, lambda a: mu_inverse(a[0])),
    "phi-k": (2, lambda a: phi_k(a[0], a[1])),
    "c-of-k": (1, lambda a: c_of_k(a[0])),
    "omega": (1, lambda a: sphere_surface_area(int(a[0]))),
}


def _cmd_specfun(args) -> int:
    name = args.name
    if name not in _SPECFUN_TABLE:
        raise ValueError(f"unknown special function {name!r}; "
                         f"choose from {', '.join(sorted(_SPECFUN_TABLE))}")
    arity, fn = _SPECFUN_TABLE[name]
    if len(args.args) != arity:
        raise ValueError(f"{name} takes {arity} argument(s), got {len(args.args)}")
    print(format_float(fn([float(v) for v in args.args])))
    return 0


# ---------------------------------------------------------------------------
# harnack-verify
# ---------------------------------------------------------------------------

def _ball_checks(domain, args, slack) -> list[VerificationRecord]:
    s = args.s
    n = domain.dim
    big_c = harnack.harnack_constant_ball(s, n)
    records = []
    pairs_per = max(1, args.samples // args.functions)
    for f_idx in range(args.functions):
        f = harmonic.random_positive_function([args.seed, f_idx])
        emp = harnack.empirical_harnack_constant(
            lambda pts: np.asarray(f.eval(pts)), domain, s,
            seed=args.seed + 7919 * f_idx, centers=args.centers)
        records.append(VerificationRecord.check(
            {"check": "ball-harnack-constant", "index": f_idx},
            emp, big_c, slack=slack * max(1.0, big_c)))
        pts = domain.sample_interior(2 * pairs_per, seed=args.seed + 104729 * (f_idx + 1),
                                     margin=0.05)
        vals = np.asarray(f.eval(pts))
        for i in range(pairs_per):
            x, y = pts[2 * i], pts[2 * i + 1]
            rho = metrics.rho_ball(x, y)
            ratio = float(vals[2 * i] / vals[2 * i + 1])
            records.append(VerificationRecord.check(
                {"check": "growth-bound", "index": f_idx * pairs_per + i},
                ratio, harnack.growth_bound_ball(s, big_c, rho), slack=slack * big_c ** 2))
            records.append(VerificationRecord.check(
                {"check": "harnack-metric-bound", "index": f_idx * pairs_per + i},
                harnack.harnack_metric(domain, x, y),
                harnack.hg_upper_bound(s, big_c, rho, "ball_halfspace"), slack=slack))
    # sphere configuration: y on S(x, s(1-|x|)) gives rho >= log(1+s) and ratio <= C
    f = harmonic.random_positive_function([args.seed, 0])
    centers = domain.sample_interior(args.centers, seed=args.seed + 13, margin=0.05)
    rng = np.random.default_rng(args.seed + 17)
    for i, x in enumerate(centers):
        radius = s * (1.0 - float(np.linalg.norm(x)))
        ang = rng.uniform(-math.pi, math.pi)
        y = x + radius * np.array([math.cos(ang), math.sin(ang)])
        rho = metrics.rho_ball(x, y)
        records.append(VerificationRecord.check(
            {"check": "sphere-side-condition", "index": i},
            math.log1p(s), rho, slack=1e-12))
        ux, uy = float(np.asarray(f.eval(x[None]))[0]), float(np.asarray(f.eval(y[None]))[0])
        records.append(VerificationRecord.check(
            {"check": "sphere-harnack-bound", "index": i},
            ux / uy, harnack.sphere_harnack_bound(s, n), slack=slack * big_c))
    return records


def _halfspace_checks(domain, args, slack) -> list[VerificationRecord]:
    s = args.s
    records = []
    for idx, beta in enumerate((1.0, -2.0)):
        emp = harnack.empirical_harnack_constant(
            lambda pts: domain.boundary_distances(pts) ** beta, domain, s,
            seed=args.seed + idx, centers=args.centers)
        rhs = harnack.harnack_constant_power_distance(s, beta)
        records.append(VerificationRecord.check(
            {"check": f"power-distance-beta={beta:g}", "index": idx},
            emp, rhs, slack=slack * rhs))
    pts = domain.sample_interior(2 * args.samples, seed=args.seed, margin=0.05)
    big_c = harnack.harnack_constant_ball(s, domain.dim)
    for i in range(args.samples):
        x, y = pts[2 * i], pts[2 * i + 1]
        rho = metrics.rho_halfspace(x, y)
        records.append(VerificationRecord.check(
            {"check": "harnack-metric-bound", "index": i},
            harnack.harnack_metric(domain, x, y),
            harnack.hg_upper_bound(s, big_c, rho, "ball_halfspace"), slack=slack))
    return records


def _slit_checks(domain, args, slack) -> list[VerificationRecord]:
    # the sharp arg-function constant is specific to s = 1/2
    def arg_branch(pts):
        return np.mod(np.arctan2(pts[:, 1], pts[:, 0]), 2.0 * math.pi)

    emp = harnack.empirical_harnack_constant(arg_branch, domain, 0.5,
                                             seed=args.seed, centers=args.centers)
    rhs = harnack.SLIT_PLANE_ARG_CONSTANT
    return [VerificationRecord.check({"check": "slit-arg-constant", "index": 0},
                                     emp, rhs, slack=slack * rhs)]


def _cmd_harnack_verify(args) -> int:
    domain = parse_domain(args.domain)
    slack = args.tolerance if args.tolerance is not None else 1e-9
    if isinstance(domain, UnitBall) and domain.dim == 2:
        records = _ball_checks(domain, args, slack)
    elif isinstance(domain, HalfSpace) and domain.dim == 2:
        records = _halfspace_checks(domain, args, slack)
    elif isinstance(domain, SlitPlane):
        records = _slit_checks(domain, args, slack)
    else:
        raise ValueError(f"harnack-verify supports ball:n=2, halfspace:n=2 and "
                         f"slit-plane, got {domain.name}")
    config = _config_echo(args, "harnack-verify", {"slack": slack})
    return _emit_report(records, ["check", "index", "lhs", "rhs", "margin", "pass"],
                        config, args.output)


# ---------------------------------------------------------------------------
# schwarz-verify / gradient-verify
# ---------------------------------------------------------------------------

def _sweep_functions(args):
    """Seeded list of (tag, HarmonicDiskFunction) pairs for random sweeps."""
    count = max(1, math.ceil(args.samples / 50))
    funcs = []
    for i in range(count):
        complex_valued = i % 2 == 1
        funcs.append((i, harmonic.random_bounded_function(
            [args.seed, i], complex_valued=complex_valued)))
    return funcs


def _cmd_schwarz_verify(args) -> int:
    slack = args.tolerance if args.tolerance is not None else 1e-8
    records: list[VerificationRecord] = []
    if args.function == "u0":
        f = harmonic.ExtremalBounded(harmonic.UNIT_DISK)
        for i, r in enumerate(np.linspace(0.05, 0.9, args.samples)):
            z = complex(0.0, r)
            lhs = abs(f.eval(z) - harmonic.centering_coefficient(f.disk, r) * f.mean_value())
            rhs = harmonic.schwarz_center_bound(f.disk, r)
            records.append(VerificationRecord.check(
                {"z_re": 0.0, "z_im": float(r)}, lhs, rhs, slack=slack))
    elif args.function == "ell":
        bounds = harmonic.IntervalRange(args.alpha, args.beta)
        f = harmonic.ExtremalInterval(bounds)
        per = args.samples
        records.extend(harmonic.schwarz_deviation_check(f, samples=per, seed=args.seed,
                                                        slack=slack))
    else:
        funcs = _sweep_functions(args)
        per = max(1, args.samples // len(funcs))
        for i, f in funcs:
            records.extend(harmonic.schwarz_deviation_check(
                f, samples=per, seed=args.seed + 31 * i, slack=slack))
    config = _config_echo(args, "schwarz-verify", {"slack": slack})
    return _emit_report(records, ["z_re", "z_im", "lhs", "rhs", "margin", "pass"],
                        config, args.output)


def _cmd_gradient_verify(args) -> int:
    slack = args.tolerance if args.tolerance is not None else 1e-8
    records: list[VerificationRecord] = []

    def bound_for(u_val: float, z_abs: float) -> float:
        if args.bound == "kv":
            return harmonic.kv_gradient_bound(u_val, z_abs)
        return harmonic.chen_gradient_bound(u_val, z_abs)

    if args.function == "u0":
        f = harmonic.ExtremalBounded(harmonic.UNIT_DISK)
        z = harmonic.sample_disk_points(args.samples, args.seed, rmax=0.9)
        vals = np.asarray(f.eval(z))
        grads = np.asarray(f.gradient(z))
        for i in range(args.samples):
            lhs = float(np.hypot(grads[i, 0], grads[i, 1]))
            rhs = harmonic.kv_gradient_bound(float(vals[i]), float(abs(z[i])))
            records.append(VerificationRecord.check(
                {"z_re": float(z[i].real), "z_im": float(z[i].imag)}, lhs, rhs, slack=slack))
    elif args.function == "ell":
        bounds = harmonic.IntervalRange(args.alpha, args.beta)
        f = harmonic.ExtremalInterval(bounds)
        z = harmonic.sample_disk_points(args.samples, args.seed, rmax=0.9)
        vals = np.asarray(f.eval(z))
        grads = np.asarray(f.gradient(z))
        for i in range(args.samples):
            lhs = float(np.hypot(grads[i, 0], grads[i, 1]))
            rhs = harmonic.interval_gradient_bound(bounds, float(vals[i]),
                                                   float(abs(z[i])), "quadratic")
            records.append(VerificationRecord.check(
                {"z_re": float(z[i].real), "z_im": float(z[i].imag)}, lhs, rhs, slack=slack))
    else:
        count = max(1, math.ceil(args.samples / 50))
        per = max(1, args.samples // count)
        for i in range(count):
            f = harmonic.random_bounded_function([args.seed, i], fill=0.9)
            z = harmonic.sample_disk_points(per, args.seed + 31 * i, rmax=0.9)
            vals = np.asarray(f.eval(z))
            grads = np.asarray(f.gradient(z))
            for jj in range(per):
                lhs = float(np.hypot(grads[jj, 0], grads[jj, 1]))
                rhs = bound_for(float(vals[jj]), float(abs(z[jj])))
                records.append(VerificationRecord.check(
                    {"z_re": float(z[jj].real), "z_im": float(z[jj].imag)},
                    lhs, rhs, slack=slack))
    config = _config_echo(args, "gradient-verify", {"slack": slack})
    return _emit_report(records, ["z_re", "z_im", "lhs", "rhs", "margin", "pass"],
                        config, args.output)


# ---------------------------------------------------------------------------
# counterexample
# ---------------------------------------------------------------------------

def _cmd_counterexample(args) -> int:
    params = _distortion_params(args)
    records = harnack.counterexample_remark(args.pmax, s=args.s, params=params)
    p0 = harnack.first_failure_index(records)
    summary = summarize(records)
    config = _config_echo(args, "counterexample", {"p0": p0})
    if args.output == "json":
        payload = {
            "config": config,
            "records": [
                {"p": r.inputs["p"], "log_lhs": r.lhs, "rhs": math.exp(r.rhs),
                 "pass": r.passed}
                for r in records
            ],
            "summary": summary,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for key, val in config.items():
            print(f"# {key}={val}")
        print("p,log_lhs,rhs,pass")
        for r in records:
            print(f"{r.inputs['p']},{format_float(r.lhs)},"
                  f"{format_float(math.exp(r.rhs))},{'true' if r.passed else 'false'}")
        print(f"# checked={summary['checked']} passed={summary['passed']} "
              f"max_violation={format_float(summary['max_violation'])}")
    return 0 if summary["passed"] == summary["checked"] else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--tolerance", type=float, default=None,
                        help="slack added to every inequality check")
    common.add_argument("--output", choices=("csv", "json"), default="csv")
    common.add_argument("--resolution", type=int, default=metrics.DEFAULT_RESOLUTION)
    common.add_argument("--cn", type=float, default=1.0, help="modulus-bound constant c_n")
    common.add_argument("--b", type=float, default=1.0, help="quasiconformal ball constant b")
    common.add_argument("--A", type=float, default=1.0, help="uniformity constant A")
    common.add_argument("--KI", type=float, default=1.0, help="inner dilatation K_I")
    common.add_argument("--K", type=float, default=1.0, help="distortion constant K")

    parser = argparse.ArgumentParser(
        prog="harnacklab",
        description="Hyperbolic-type metrics, Harnack constants and sharp "
                    "harmonic Schwarz bounds, verified on seeded samples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metric", parents=[common], help="evaluate a metric at a pair")
    p.add_argument("--kind", choices=("rho", "j", "k", "bounds"), required=True)
    p.add_argument("--domain", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=_cmd_metric)

    p = sub.add_parser("geodesic", parents=[common],
                       help="quasihyperbolic distance plus polyline")
    p.add_argument("--domain", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=_cmd_geodesic)

    p = sub.add_parser("specfun", parents=[common], help="evaluate a special function")
    p.add_argument("name")
    p.add_argument("args", nargs="*")
    p.set_defaults(func=_cmd_specfun)

    p = sub.add_parser("harnack-verify", parents=[common],
                       help="Harnack inequality sweeps on a domain")
    p.add_argument("--domain", default="ball:n=2")
    p.add_argument("--s", type=float, default=0.5)
    p.add_argument("--functions", type=int, default=5,
                   help="number of seeded positive harmonic functions")
    p.add_argument("--centers", type=int, default=10,
                   help="ball centers per empirical Harnack estimate")
    p.set_defaults(func=_cmd_harnack_verify)

    p = sub.add_parser("schwarz-verify", parents=[common],
                       help="centered Schwarz-bound sweeps")
    p.add_argument("--function", choices=("u0", "ell", "random"), default="random")
    p.add_argument("--alpha", type=float, default=-1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.set_defaults(func=_cmd_schwarz_verify)

    p = sub.add_parser("gradient-verify", parents=[common],
                       help="sharp gradient-bound sweeps")
    p.add_argument("--function", choices=("u0", "ell", "random"), default="random")
    p.add_argument("--bound", choices=("chen", "kv"), default="chen")
    p.add_argument("--alpha", type=float, default=-1.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.set_defaults(func=_cmd_gradient_verify)

    p = sub.add_parser("counterexample", parents=[common],
                       help="connected-boundary counterexample table")
    p.add_argument("--pmax", type=int, default=6)
    p.add_argument("--s", type=float, default=0.5)
    p.set_defaults(func=_cmd_counterexample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ExteriorPointError, NotImplementedError,
            metrics.PathNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
