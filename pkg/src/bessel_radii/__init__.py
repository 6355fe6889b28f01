"""Radii of alpha-convexity of the normalized Bessel functions f_nu, g_nu, h_nu."""

__version__ = "0.1.0"

from .bessel import (
    DEFAULT_ACCURACY,
    EvalAccuracy,
    Order,
    bessel_j,
    bessel_j_dz,
    dini_g_fn,
    dini_h_fn,
    gamma_real,
)
from .errors import (
    BesselRadiiError,
    BracketFailure,
    CapExceeded,
    DomainCapExceeded,
    InvalidOrder,
    NearPole,
    NonConvergence,
    OutOfInterval,
    PreconditionViolated,
    ScanExhausted,
    ZeroArgument,
)
from .functional import (
    Family,
    FunctionalParams,
    RadiusResult,
    RatioForm,
    TailRule,
    ZeroSum,
    ZeroSumValue,
    d_dalpha_functional,
    eval_functional,
    eval_zero_sum,
    functional_domain_cap,
    lemma21_gap,
    radius_alpha_convexity,
    starlikeness_radius_h,
)
from .oracle import CircleScan, RadiusVerification, min_re_on_circle, verify_radius
from .verify import GridEntry, GridSpec, VerificationReport, run_verification
from .zeros import (
    InterlacingReport,
    ZeroKind,
    ZeroTable,
    compute_zeros,
    verify_interlacing,
)

__all__ = [name for name in dir() if not name.startswith("_")]
