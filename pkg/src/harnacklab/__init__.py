"""harnacklab: hyperbolic-type metrics, Harnack constants, and sharp harmonic
Schwarz bounds, each paired with seeded numerical verification."""

from .domains import (
    Disk,
    Domain,
    ExteriorPointError,
    GenericDomain,
    HalfSpace,
    PuncturedPlane,
    SlitPlane,
    UnitBall,
    parse_domain,
)
from .harmonic import (
    BoundaryData,
    DiskSpec,
    ExtremalBounded,
    ExtremalInterval,
    IntervalRange,
    chen_gradient_bound,
    heinz_bound,
    interval_gradient_bound,
    kv_gradient_bound,
    schwarz_center_bound,
)
from .harnack import (
    DistortionParams,
    HarnackParams,
    counterexample_remark,
    empirical_harnack_constant,
    harnack_constant_ball,
    harnack_metric,
)
from .metrics import (
    GeodesicPath,
    PathNotFoundError,
    j_metric,
    quasihyperbolic,
    rho_ball,
    rho_halfspace,
    uniformity_ratio,
)
from .records import VerificationRecord
from .specfun import c_of_k, elliptic_k, mu, mu_inverse, phi_k, sphere_surface_area

__version__ = "0.1.0"

__all__ = [
    "Disk", "Domain", "ExteriorPointError", "GenericDomain", "HalfSpace",
    "PuncturedPlane", "SlitPlane", "UnitBall", "parse_domain",
    "BoundaryData", "DiskSpec", "ExtremalBounded", "ExtremalInterval",
    "IntervalRange", "chen_gradient_bound", "heinz_bound",
    "interval_gradient_bound", "kv_gradient_bound", "schwarz_center_bound",
    "DistortionParams", "HarnackParams", "counterexample_remark",
    "empirical_harnack_constant", "harnack_constant_ball", "harnack_metric",
    "GeodesicPath", "PathNotFoundError", "j_metric", "quasihyperbolic",
    "rho_ball", "rho_halfspace", "uniformity_ratio",
    "VerificationRecord",
    "c_of_k", "elliptic_k", "mu", "mu_inverse", "phi_k", "sphere_surface_area",
    "__version__",
]
