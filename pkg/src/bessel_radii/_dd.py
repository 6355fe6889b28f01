"""Double-double (error-free transformation) arithmetic helpers.

A value is a pair (hi, lo) of floats with hi = fl(hi + lo); the pair carries
roughly 32 significant decimal digits.  Only the handful of operations needed
by the power-series summation are provided.  No FMA is assumed: products are
split Dekker-style.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    s, e = two_sum(a[0], b[0])
    e += a[1] + b[1]
    return two_sum(s, e)


def dd_mul(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    p, e = two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return two_sum(p, e)


def dd_div(a: tuple[float, float], b: tuple[float, float]) -> tuple[float, float]:
    # long division with two refinement steps
    q1 = a[0] / b[0]
    r = dd_add(a, dd_mul((-q1, 0.0), b))
    q2 = r[0] / b[0]
    r = dd_add(r, dd_mul((-q2, 0.0), b))
    q3 = r[0] / b[0]
    q, e = two_sum(q1, q2)
    return two_sum(q, e + q3)


def dd_neg(a: tuple[float, float]) -> tuple[float, float]:
    return -a[0], -a[1]
