"""Power-series evaluation of J_nu, its derivative and the two Dini combinations.

Everything is built on the entire even series

    A_nu(s) = sum_{n>=0} (-1)^n (s/4)^n / (n! Gamma(n+nu+1)),

so that J_nu(z) = (z/2)^nu * A_nu(z^2).  Working with A in the variable
s = z^2 keeps every ratio used downstream free of the principal branch cut
of (z/2)^nu.  For real s the sum is carried in double-double arithmetic,
which absorbs the ~13 digits of cancellation the series suffers near the
top of the trusted range; for complex s a Neumaier-compensated double sum
is used (the complex callers stay at small |z| where cancellation is mild).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._dd import dd_add, dd_div, dd_mul, dd_neg, two_prod, two_sum
from .errors import DomainCapExceeded, InvalidOrder, NonConvergence, ZeroArgument

__all__ = [
    "Order",
    "EvalAccuracy",
    "DEFAULT_ACCURACY",
    "bessel_series",
    "bessel_j",
    "bessel_j_dz",
    "dini_g_fn",
    "dini_h_fn",
    "gamma_real",
]


@dataclass(frozen=True)
class Order:
    """Real Bessel order nu; nu > -1 throughout, stricter per family."""

    nu: float

    def __post_init__(self) -> None:
        if not self.nu > -1.0:
            raise InvalidOrder(f"order nu must exceed -1, got {self.nu}")


@dataclass(frozen=True)
class EvalAccuracy:
    rel_tol: float = 1e-13
    max_terms: int = 200
    domain_cap: float = 30.0

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.max_terms >= 10 and self.domain_cap > 0):
            raise ValueError("invalid EvalAccuracy settings")


DEFAULT_ACCURACY = EvalAccuracy()


def _series_real(nu: float, s: float, acc: EvalAccuracy) -> float:
    """A_nu(s) for real s, summed in double-double."""
    c0 = 1.0 / math.gamma(nu + 1.0)
    w = (s * 0.25, 0.0)
    term = (c0, 0.0)
    total = (c0, 0.0)
    # stop once terms are negligible at dd precision; terms decay
    # superexponentially past n ~ sqrt(|s|)/2 so the loop is short
    for n in range(acc.max_terms):
        d1 = float(n + 1)
        den = dd_mul((d1, 0.0), two_sum(d1, nu))
        term = dd_neg(dd_div(dd_mul(term, w), den))
        total = dd_add(total, term)
        if abs(term[0]) <= 1e-34 * abs(total[0]) + 5e-324:
            return total[0] + total[1]
    raise NonConvergence(
        f"series for nu={nu} at s={s} did not converge in {acc.max_terms} terms"
    )


def _neumaier(s: float, c: float, x: float) -> tuple[float, float]:
    t = s + x
    if abs(s) >= abs(x):
        c += (s - t) + x
    else:
        c += (x - t) + s
    return t, c


def _series_complex(nu: float, s: complex, acc: EvalAccuracy) -> complex:
    """A_nu(s) for complex s with Neumaier compensation per component."""
    term = complex(1.0 / math.gamma(nu + 1.0), 0.0)
    w = s * 0.25
    sr, cr = term.real, 0.0
    si, ci = 0.0, 0.0
    below = 0
    for n in range(acc.max_terms):
        term = -term * w / ((n + 1) * (n + 1 + nu))
        sr, cr = _neumaier(sr, cr, term.real)
        si, ci = _neumaier(si, ci, term.imag)
        scale = abs(complex(sr + cr, si + ci)) + 5e-324
        if abs(term) <= acc.rel_tol * 1e-3 * scale and (n + 1) * (n + 1 + nu) > abs(w):
            below += 1
            if below >= 2:
                return complex(sr + cr, si + ci)
        else:
            below = 0
    raise NonConvergence(
        f"series for nu={nu} at s={s} did not converge in {acc.max_terms} terms"
    )


def bessel_series(nu: float, s: complex | float, acc: EvalAccuracy = DEFAULT_ACCURACY):
    """A_nu(s) = J_nu(z) / (z/2)^nu with s = z^2.  Real s stays real."""
    if isinstance(s, complex) and s.imag != 0.0:
        return _series_complex(nu, s, acc)
    return _series_real(nu, float(s.real) if isinstance(s, complex) else float(s), acc)


def _check_cap(z: complex, acc: EvalAccuracy) -> None:
    if abs(z) > acc.domain_cap:
        raise DomainCapExceeded(
            f"|z| = {abs(z):.6g} exceeds domain cap {acc.domain_cap:.6g}"
        )


def bessel_j(order: Order, z: complex | float, acc: EvalAccuracy = DEFAULT_ACCURACY):
    """J_nu(z) from the defining series; principal branch of (z/2)^nu."""
    nu = order.nu
    _check_cap(complex(z), acc)
    if z == 0:
        if nu == 0.0:
            return 1.0
        if nu > 0.0:
            return 0.0
        raise ZeroArgument(f"J_nu unbounded at z=0 for nu={nu} < 0")
    if isinstance(z, complex) and z.imag != 0.0:
        pref = (z / 2.0) ** nu  # cmath principal branch
        return pref * bessel_series(nu, z * z, acc)
    x = float(z.real) if isinstance(z, complex) else float(z)
    if x < 0.0 and nu != round(nu):
        pref = complex(x / 2.0, 0.0) ** nu
        return pref * bessel_series(nu, x * x, acc)
    return (x / 2.0) ** nu * bessel_series(nu, x * x, acc)


def bessel_j_dz(order: Order, z: complex | float, acc: EvalAccuracy = DEFAULT_ACCURACY):
    """J_nu'(z) via the recurrence z J_nu'(z) = nu J_nu(z) - z J_{nu+1}(z)."""
    nu = order.nu
    if z == 0:
        if nu == 1.0:
            return 0.5
        if nu > 1.0:
            return 0.0
        raise ZeroArgument("derivative recurrence divides by z at z=0")
    jn = bessel_j(order, z, acc)
    jn1 = bessel_j(Order(nu + 1.0), z, acc)
    return (nu / z) * jn - jn1


def _dini(coef: float, order: Order, x: float, acc: EvalAccuracy) -> float:
    # coef*J + x*J' rewritten as (coef+nu)*J_nu - x*J_{nu+1}: well defined at x=0
    if x < 0:
        raise ZeroArgument("Dini functions are evaluated on x >= 0")
    nu = order.nu
    if x == 0.0:
        if nu > 0.0:
            return 0.0
        if nu == 0.0:
            return float(coef)
        raise ZeroArgument(f"Dini combination unbounded at x=0 for nu={nu} < 0")
    jn = bessel_j(order, x, acc)
    jn1 = bessel_j(Order(nu + 1.0), x, acc)
    return (coef + nu) * jn - x * jn1


def dini_g_fn(order: Order, x: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> float:
    """(1 - nu) J_nu(x) + x J_nu'(x); zeros alpha_{nu,n}."""
    return _dini(1.0 - order.nu, order, x, acc)


def dini_h_fn(order: Order, x: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> float:
    """(2 - nu) J_nu(x) + x J_nu'(x); zeros beta_{nu,n}."""
    return _dini(2.0 - order.nu, order, x, acc)


def gamma_real(x: float) -> float:
    """Gamma(x) for x > 0 (normalization constants of f_nu, g_nu, h_nu)."""
    if not x > 0:
        raise ValueError(f"gamma_real requires x > 0, got {x}")
    return math.gamma(x)
