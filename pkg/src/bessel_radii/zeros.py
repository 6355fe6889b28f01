"""Ordered tables of positive zeros j_{nu,n}, j'_{nu,n}, alpha_{nu,n}, beta_{nu,n}.

Bracketing is a uniform sign-change scan with step pi/8 followed by plain
bisection.  All four target kinds have simple, pi-separated zeros in the
scanned range for nu <= 10 (documented validity limit), so the scan cannot
skip a zero.  Inside the series-trusted range the targets are evaluated with
the package's own double-double series; past it (deep tables feeding the
pole-sum evaluation) scipy's J_nu takes over, since the power series is
hopeless at x in the hundreds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from scipy import special as _sp

from .bessel import EvalAccuracy, Order, bessel_series
from .errors import InvalidOrder, ScanExhausted

__all__ = [
    "ZeroKind",
    "ZeroTable",
    "compute_zeros",
    "verify_interlacing",
    "InterlacingCheck",
    "InterlacingReport",
    "first_dini_zero",
    "SERIES_SAFE_X",
]

SCAN_STEP = math.pi / 8.0
DEFAULT_ZERO_TOL = 1e-12
SERIES_SAFE_X = 42.0  # dd series keeps ~14 digits here; scipy beyond


class ZeroKind(enum.Enum):
    BESSEL_J = "j"
    BESSEL_J_PRIME = "jprime"
    DINI_G = "dini_g"
    DINI_H = "dini_h"


def _dini_target(nu: float, coef: float) -> Callable[[float], float]:
    """coef*J_nu + x*J_nu' rewritten as (coef+nu)*J_nu - x*J_{nu+1}."""
    a = coef + nu
    acc = EvalAccuracy(domain_cap=SERIES_SAFE_X)

    def f(x: float) -> float:
        if x <= SERIES_SAFE_X:
            jn = (x / 2.0) ** nu * bessel_series(nu, x * x, acc)
            jn1 = (x / 2.0) ** (nu + 1.0) * bessel_series(nu + 1.0, x * x, acc)
        else:
            jn = _sp.jv(nu, x)
            jn1 = _sp.jv(nu + 1.0, x)
        return a * jn - x * jn1

    return f


def _target(kind: ZeroKind, nu: float) -> Callable[[float], float]:
    if kind is ZeroKind.BESSEL_J:
        acc = EvalAccuracy(domain_cap=SERIES_SAFE_X)

        def f(x: float) -> float:
            if x <= SERIES_SAFE_X:
                return (x / 2.0) ** nu * bessel_series(nu, x * x, acc)
            return _sp.jv(nu, x)

        return f
    if kind is ZeroKind.BESSEL_J_PRIME:
        # x*J' = nu*J - x*J_{nu+1}; same zeros as J' on x > 0
        return _dini_target(nu, 0.0)
    if kind is ZeroKind.DINI_G:
        return _dini_target(nu, 1.0 - nu)
    if kind is ZeroKind.DINI_H:
        return _dini_target(nu, 2.0 - nu)
    raise ValueError(kind)


@dataclass(frozen=True)
class ZeroTable:
    kind: ZeroKind
    order: Order
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.values, self.values[1:]):
            if not a < b:
                raise ValueError("zero table must be strictly increasing")

    def __getitem__(self, n: int) -> float:
        """1-based access matching the j_{nu,n} indexing convention."""
        if n < 1:
            raise IndexError("zero index is 1-based")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)


def _bisect(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo < 0) == (fm < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_zeros(
    f: Callable[[float], float],
    start: float,
    count: int,
    tol: float,
    max_x: float,
) -> list[float]:
    found: list[float] = []
    x, fx = start, f(start)
    while len(found) < count:
        x2 = x + SCAN_STEP
        if x2 > max_x:
            raise ScanExhausted(
                f"scan reached x={max_x:.4g} with only {len(found)}/{count} zeros"
            )
        fx2 = f(x2)
        if fx == 0.0:
            found.append(x)
        elif (fx < 0) != (fx2 < 0):
            found.append(_bisect(f, x, x2, tol))
        x, fx = x2, fx2
    return found


@lru_cache(maxsize=256)
def _compute_zeros_cached(
    kind: ZeroKind, nu: float, count: int, zero_tol: float, max_x: float | None
) -> ZeroTable:
    order = Order(nu)
    f = _target(kind, nu)
    start = 1e-9
    if kind is ZeroKind.BESSEL_J_PRIME and nu > 0:
        # j'_{nu,1} >= nu; skip the near-origin region where x*J' ~ x^nu > 0
        start = max(start, nu - 1.0 + 1e-9)
    if max_x is None:
        max_x = (count + abs(nu) / 2.0 + 3.0) * math.pi + 5.0
    values = _scan_zeros(f, start, count, zero_tol, max_x)
    table = ZeroTable(kind, order, tuple(values))
    if kind is ZeroKind.BESSEL_J_PRIME and nu > 0 and table[1] < nu - 1e-9:
        raise ScanExhausted("spurious near-origin zero in J' table")
    return table


def compute_zeros(
    kind: ZeroKind,
    order: Order,
    count: int,
    zero_tol: float = DEFAULT_ZERO_TOL,
    max_x: float | None = None,
) -> ZeroTable:
    """First `count` positive zeros of the requested kind, bisected to zero_tol."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if zero_tol <= 0:
        raise ValueError("zero_tol must be positive")
    if order.nu > 10.0:
        raise InvalidOrder("sign-change scan validated only for nu <= 10")
    return _compute_zeros_cached(kind, order.nu, count, zero_tol, max_x)


def first_dini_zero(order: Order, coef: float, zero_tol: float = DEFAULT_ZERO_TOL) -> float:
    """Smallest positive zero of coef*J_nu(x) + x*J_nu'(x) for coef + nu > 0."""
    if coef + order.nu <= 0:
        raise InvalidOrder("generic Dini scan requires coef + nu > 0")
    f = _dini_target(order.nu, coef)
    return _scan_zeros(f, 1e-9, 1, zero_tol, 20.0 * math.pi)[0]


@dataclass(frozen=True)
class InterlacingCheck:
    name: str
    lower: float
    upper: float

    @property
    def margin(self) -> float:
        return self.upper - self.lower

    @property
    def passed(self) -> bool:
        return self.lower < self.upper


@dataclass(frozen=True)
class InterlacingReport:
    order: Order
    checks: tuple[InterlacingCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_interlacing(order: Order, count: int) -> InterlacingReport:
    """Check nu <= j'_1 < j_1 < j'_2 < ... (nu > 0) and the Dixon chains
    alpha_n, beta_n in (j_{n-1}, j_n) with j_0 := 0, up to index `count`."""
    nu = order.nu
    checks: list[InterlacingCheck] = []
    j = compute_zeros(ZeroKind.BESSEL_J, order, count)
    if nu > 0:
        jp = compute_zeros(ZeroKind.BESSEL_J_PRIME, order, count + 1)
        checks.append(InterlacingCheck("nu <= j'_1", nu, jp[1] + 1e-15))
        for n in range(1, count + 1):
            checks.append(InterlacingCheck(f"j'_{n} < j_{n}", jp[n], j[n]))
            checks.append(InterlacingCheck(f"j_{n} < j'_{n + 1}", j[n], jp[n + 1]))
    for kind, sym in ((ZeroKind.DINI_G, "alpha"), (ZeroKind.DINI_H, "beta")):
        d = compute_zeros(kind, order, count)
        prev = 0.0
        for n in range(1, count + 1):
            checks.append(InterlacingCheck(f"j_{n - 1} < {sym}_{n}", prev, d[n]))
            checks.append(InterlacingCheck(f"{sym}_{n} < j_{n}", d[n], j[n]))
            prev = j[n]
    return InterlacingReport(order, tuple(checks))
