"""The alpha-convexity functional for the three normalized Bessel families.

Two independent evaluation routes are provided and kept deliberately apart:

* RatioForm: the closed ratio expressions in terms of J_nu, J_{nu+1},
  J_{nu+2}, evaluated through the branch-free even series A_nu(s) of
  :mod:`bessel_radii.bessel` (s = z^2 for families F and G, s = z itself
  for family H, whose natural variable already is the squared one).
* ZeroSum: the pole-sum expansions over the zero tables of
  :mod:`bessel_radii.zeros`, truncated at `terms` explicit summands with a
  closed-form comparison tail (digamma differences over the asymptotically
  pi-spaced comparison zeros) plus an explicit correction sum.  The
  correction residual is tracked as an interval half-width so agreement
  tests are honest about truncation.

The radius of alpha-convexity of order beta is the unique root of
J(alpha, u(r)) = beta on (0, cap); the functional decreases strictly from 1
to -infinity there, so plain bisection is sound.
"""

from __future__ import annotations

import cmath
import enum
import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special as _sp

from .bessel import DEFAULT_ACCURACY, EvalAccuracy, Order, bessel_series
from .errors import (
    BracketFailure,
    InvalidOrder,
    NearPole,
    OutOfInterval,
    PreconditionViolated,
)
from .zeros import ZeroKind, compute_zeros, first_dini_zero

__all__ = [
    "Family",
    "FunctionalParams",
    "TailRule",
    "RatioForm",
    "ZeroSum",
    "RadiusResult",
    "ZeroSumValue",
    "eval_functional",
    "eval_zero_sum",
    "functional_domain_cap",
    "radius_alpha_convexity",
    "d_dalpha_functional",
    "lemma21_gap",
    "starlikeness_radius_h",
    "default_terms",
    "default_radius_tol",
]

MIN_NU_FAMILY_F = 1e-3
POLE_GUARD = 1e-13
RADIUS_RESIDUAL_TOL = 1e-9
_TAIL_CORRECTION_SPAN = 100_000


def default_terms() -> int:
    return int(os.environ.get("BESSEL_RADII_MAX_TERMS", "500"))


def default_radius_tol() -> float:
    return float(os.environ.get("BESSEL_RADII_TOL", "1e-12"))


class Family(enum.Enum):
    F = "f"
    G = "g"
    H = "h"

    def validate_order(self, order: Order) -> None:
        if self is Family.F and order.nu < MIN_NU_FAMILY_F:
            raise InvalidOrder(
                f"family F requires nu >= {MIN_NU_FAMILY_F} (got {order.nu}); "
                "the 1/nu coefficient is unbounded as nu -> 0"
            )


@dataclass(frozen=True)
class FunctionalParams:
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise PreconditionViolated(f"alpha must be >= 0, got {self.alpha}")
        if not 0 <= self.beta < 1:
            raise PreconditionViolated(f"beta must lie in [0, 1), got {self.beta}")


class TailRule(enum.Enum):
    NONE = "none"
    INTEGRAL = "integral"


@dataclass(frozen=True)
class RatioForm:
    pass


@dataclass(frozen=True)
class ZeroSum:
    terms: int = 500
    tail: TailRule = TailRule.INTEGRAL

    def __post_init__(self) -> None:
        if self.terms < 1:
            raise ValueError("ZeroSum needs terms >= 1")


@dataclass(frozen=True)
class ZeroSumValue:
    """Midpoint of the truncation interval plus its half-width."""

    value: float
    halfwidth: float


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    domain_cap_value: float


# ---------------------------------------------------------------------------
# ratio-form evaluation (shared real/complex code path)


def _ratio_value(family: Family, nu: float, alpha: float, z, acc: EvalAccuracy):
    """J(alpha, u(z)) through the even series; z may be real or complex.

    For families F and G the series variable is s = z^2; for H it is s = z.
    Every expression below is a rational function of s, so the principal
    branch of (z/2)^nu never enters.
    """
    if family is Family.H:
        s = z
    else:
        s = z * z
    a0 = bessel_series(nu, s, acc)
    a1 = bessel_series(nu + 1.0, s, acc)
    if abs(a0) < POLE_GUARD:
        raise NearPole(f"J_nu denominator ~ {abs(a0):.3e} at z={z}")

    if family is Family.F:
        q = nu - (s / 2.0) * a1 / a0  # z J'/J
        starlike = q / nu
        if alpha == 0.0:
            return starlike
        if abs(q) < POLE_GUARD * max(1.0, abs(nu)):
            raise NearPole(f"z J'/J denominator ~ {abs(q):.3e} at z={z}")
        convex = -(s - nu * nu) / q  # 1 + z J''/J'
        return alpha * convex + (1.0 / nu - alpha) * q

    if family is Family.G:
        x_term = (s / 2.0) * a1 / a0  # z J_{nu+1}/J_nu
        if alpha == 0.0:
            return 1.0 - x_term
        a2 = bessel_series(nu + 2.0, s, acc)
        den = a0 - (s / 2.0) * a1
        if abs(den) < POLE_GUARD:
            raise NearPole(f"Dini-G denominator ~ {abs(den):.3e} at z={z}")
        y_term = (s / 2.0) * ((s / 2.0) * a2 - 3.0 * a1) / den  # z g''/g'
        return 1.0 + (alpha - 1.0) * x_term + alpha * y_term

    # family H: s is the native variable, w = sqrt(s) never materializes
    term1 = 1.0 - (s / 4.0) * a1 / a0
    if alpha == 0.0:
        return term1
    a2 = bessel_series(nu + 2.0, s, acc)
    den = 2.0 * a0 - (s / 2.0) * a1
    if abs(den) < POLE_GUARD:
        raise NearPole(f"Dini-H denominator ~ {abs(den):.3e} at z={z}")
    term2 = 1.0 + (s / 4.0) * ((s / 2.0) * a2 - 4.0 * a1) / den
    return (1.0 - alpha) * term1 + alpha * term2


def eval_ratio_complex(
    family: Family, order: Order, alpha: float, z: complex, acc: EvalAccuracy | None = None
) -> complex:
    """Complex J(alpha, u(z)) for the disk oracle; no domain-cap clipping."""
    family.validate_order(order)
    if acc is None:
        cap = 2.0 * math.sqrt(abs(z)) + 10.0 if family is Family.H else 2.0 * abs(z) + 10.0
        acc = EvalAccuracy(domain_cap=max(cap, DEFAULT_ACCURACY.domain_cap))
    return complex(_ratio_value(family, order.nu, alpha, z, acc))


# ---------------------------------------------------------------------------
# zero-sum evaluation


def _zero_table_array(kind: ZeroKind, order: Order, count: int) -> np.ndarray:
    return np.asarray(compute_zeros(kind, order, count).values)


def _calibrate_tail_model(z: np.ndarray) -> tuple[float, float]:
    """Fit z(n) = pi*n + b + C/(pi*n + b) from two trailing zeros."""
    n = len(z)
    if n < 2:
        return z[-1] - math.pi * n, 0.0
    i2 = max(0, n - 11)
    u1 = z[-1] - math.pi * n
    u2 = z[i2] - math.pi * (i2 + 1)
    if z[-1] == z[i2]:
        return u1, 0.0
    c = (u1 - u2) / (1.0 / z[-1] - 1.0 / z[i2])
    b = u1 - c / z[-1]
    return b, c


def _pole_sum(z: np.ndarray, r: float, squared: bool, tail: TailRule) -> ZeroSumValue:
    """Sum of 2r^2/(z_n^2 - r^2) (squared=True) or r/(z_n^2 - r) over the
    table, with the comparison-series tail for the omitted n > len(z)."""
    n_terms = len(z)
    if squared:
        explicit = float(np.sum(2.0 * r * r / (z * z - r * r)))
    else:
        explicit = float(np.sum(r / (z * z - r)))
    if tail is TailRule.NONE:
        return ZeroSumValue(explicit, 0.0)

    b, c = _calibrate_tail_model(z)
    a = r if squared else math.sqrt(r)  # pole offset of the partial fractions
    scale = r / math.pi if squared else a / (2.0 * math.pi)
    cmp_tail = scale * float(
        _sp.psi(n_terms + 1 + (b + a) / math.pi) - _sp.psi(n_terms + 1 + (b - a) / math.pi)
    )

    n = np.arange(n_terms + 1, n_terms + 1 + _TAIL_CORRECTION_SPAN, dtype=float)
    beta = math.pi * n + b
    zn = beta + c / beta
    if squared:
        corr = float(np.sum(2.0 * r * r / (zn * zn - r * r) - 2.0 * r * r / (beta * beta - r * r)))
    else:
        corr = float(np.sum(r / (zn * zn - r) - r / (beta * beta - r)))

    # residual bounds: correction beyond the explicit span + model mismatch
    beta_m = beta[-1]
    beta_n = beta[0]
    coef = 4.0 * r * r if squared else 2.0 * r
    beyond = coef * abs(c) / (3.0 * math.pi * beta_m**3)
    tail_idx = np.arange(max(1, n_terms - 5), n_terms, dtype=float)
    if len(tail_idx):
        bt = math.pi * tail_idx + b
        model = bt + c / bt
        e_model = float(np.max(np.abs(model - z[tail_idx.astype(int) - 1])))
    else:
        e_model = 0.0
    mismatch = coef * e_model / (5.0 * math.pi * beta_n**2) * 2.0
    return ZeroSumValue(explicit + cmp_tail + corr, beyond + mismatch)


def _family_sums(
    family: Family, order: Order, alpha: float, r: float, terms: int, tail: TailRule
) -> ZeroSumValue:
    squared = family is not Family.H
    j = _pole_sum(
        _zero_table_array(ZeroKind.BESSEL_J, order, terms), r, squared, tail
    )
    if family is Family.F:
        cj = -(1.0 / order.nu - alpha)
        other_kind = ZeroKind.BESSEL_J_PRIME
    elif family is Family.G:
        cj = alpha - 1.0
        other_kind = ZeroKind.DINI_G
    else:
        cj = alpha - 1.0
        other_kind = ZeroKind.DINI_H
    value = 1.0 + cj * j.value
    halfwidth = abs(cj) * j.halfwidth
    if alpha != 0.0:
        other = _pole_sum(_zero_table_array(other_kind, order, terms), r, squared, tail)
        value -= alpha * other.value
        halfwidth += abs(alpha) * other.halfwidth
    return ZeroSumValue(value, halfwidth)


# ---------------------------------------------------------------------------
# public operations


@lru_cache(maxsize=128)
def _cap_cached(family: Family, nu: float) -> float:
    order = Order(nu)
    if family is Family.F:
        return compute_zeros(ZeroKind.BESSEL_J_PRIME, order, 1)[1]
    if family is Family.G:
        return compute_zeros(ZeroKind.DINI_G, order, 1)[1]
    return compute_zeros(ZeroKind.DINI_H, order, 1)[1] ** 2


def functional_domain_cap(family: Family, order: Order) -> float:
    """j'_{nu,1}, alpha_{nu,1} or beta_{nu,1}^2: the proven radius upper bound."""
    family.validate_order(order)
    return _cap_cached(family, order.nu)


def eval_zero_sum(
    family: Family,
    order: Order,
    alpha: float,
    r: float,
    terms: int | None = None,
    tail: TailRule = TailRule.INTEGRAL,
) -> ZeroSumValue:
    """Pole-sum value of J(alpha, u(r)) with its truncation half-width."""
    family.validate_order(order)
    cap = functional_domain_cap(family, order)
    if not 0.0 < r < cap:
        raise OutOfInterval(f"r={r} outside (0, {cap:.12g}) for family {family.value}")
    if terms is None:
        terms = default_terms()
    return _family_sums(family, order, alpha, r, terms, tail)


def eval_functional(
    family: Family,
    order: Order,
    alpha: float,
    r: float,
    method: RatioForm | ZeroSum = RatioForm(),
) -> float:
    """J(alpha, u(r)) on the real axis, by the requested route."""
    family.validate_order(order)
    if alpha < 0:
        raise PreconditionViolated("alpha must be >= 0")
    cap = functional_domain_cap(family, order)
    if not 0.0 < r < cap:
        raise OutOfInterval(f"r={r} outside (0, {cap:.12g}) for family {family.value}")
    if isinstance(method, ZeroSum):
        return _family_sums(family, order, alpha, r, method.terms, method.tail).value
    acc = EvalAccuracy(domain_cap=max(DEFAULT_ACCURACY.domain_cap, 2.0 * cap))
    return float(_ratio_value(family, order.nu, alpha, r, acc).real)


def radius_alpha_convexity(
    family: Family,
    order: Order,
    params: FunctionalParams,
    tol: float | None = None,
) -> RadiusResult:
    """Unique root of J(alpha, u(r)) = beta on (0, cap), by bisection.

    The functional decreases strictly from 1 at the origin to -infinity at
    the cap (for alpha > 0; for alpha = 0 it may stay finite, in which case
    a root exactly at the cap is reported with a collapsed bracket).
    """
    family.validate_order(order)
    if tol is None:
        tol = default_radius_tol()
    if tol <= 0:
        raise PreconditionViolated("tol must be positive")
    alpha, beta = params.alpha, params.beta
    cap = functional_domain_cap(family, order)
    acc = EvalAccuracy(domain_cap=max(DEFAULT_ACCURACY.domain_cap, 2.0 * cap))

    def f(r: float) -> float:
        try:
            return float(_ratio_value(family, order.nu, alpha, r, acc).real) - beta
        except NearPole:
            if r > 0.999 * cap:
                return -math.inf  # the divergence at the cap
            raise

    lo = 1e-9 * cap
    # keep hi clear of the cap's own zero-location tolerance; otherwise a
    # cap overestimate puts hi past the pole and flips the sign of f there
    hi = cap - 1e-11 * max(1.0, cap)
    if not f(lo) > 0:
        raise BracketFailure("functional not above beta near the origin")
    iterations = 0
    if f(hi) >= 0:
        # root sits at the cap itself (alpha = 0 with small beta)
        radius = 0.5 * (hi + cap)
        residual = abs(
            eval_zero_sum(family, order, alpha, radius).value - beta
        )
        return RadiusResult(radius, (hi, cap), residual, iterations, cap)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        iterations += 1
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    radius = 0.5 * (lo + hi)
    residual = abs(eval_zero_sum(family, order, alpha, radius).value - beta)
    return RadiusResult(radius, (lo, hi), residual, iterations, cap)


def d_dalpha_functional(
    family: Family, order: Order, r: float, terms: int | None = None
) -> float:
    """d/d(alpha) of J(alpha, u(r)): the difference of the two pole sums.

    Strictly negative in (0, cap) by the interlacing of the zero families.
    """
    family.validate_order(order)
    cap = functional_domain_cap(family, order)
    if not 0.0 < r < cap:
        raise OutOfInterval(f"r={r} outside (0, {cap:.12g})")
    if terms is None:
        terms = default_terms()
    squared = family is not Family.H
    other_kind = {
        Family.F: ZeroKind.BESSEL_J_PRIME,
        Family.G: ZeroKind.DINI_G,
        Family.H: ZeroKind.DINI_H,
    }[family]
    s_j = _pole_sum(_zero_table_array(ZeroKind.BESSEL_J, order, terms), r, squared, TailRule.INTEGRAL)
    s_o = _pole_sum(_zero_table_array(other_kind, order, terms), r, squared, TailRule.INTEGRAL)
    return s_j.value - s_o.value


def lemma21_gap(lam: float, a: float, b: float, z: complex) -> float:
    """LHS - RHS of the key inequality: nonnegative for a > b > 0, |z| < b,
    lam <= 1 (equality on the positive real axis)."""
    if not (a > b > 0):
        raise PreconditionViolated(f"need a > b > 0, got a={a}, b={b}")
    if not abs(z) < b:
        raise PreconditionViolated(f"need |z| < b, got |z|={abs(z)}")
    if not lam <= 1:
        raise PreconditionViolated(f"need lambda <= 1, got {lam}")
    z = complex(z)
    t = abs(z)
    lhs = lam * (z / (a - z)).real - (z / (b - z)).real
    rhs = lam * t / (a - t) - t / (b - t)
    return lhs - rhs


def starlikeness_radius_h(order: Order, beta: float) -> float:
    """Smallest positive root of z^(1/2) J_nu'(z^(1/2)) + (2-2beta-nu)
    J_nu(z^(1/2)) = 0: the corrected starlikeness radius of h_nu."""
    if not 0 <= beta < 1:
        raise PreconditionViolated("beta must lie in [0, 1)")
    x1 = first_dini_zero(order, 2.0 - 2.0 * beta - order.nu)
    return x1 * x1
