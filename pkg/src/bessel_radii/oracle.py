"""Brute-force complex-disk verification of the radius results.

The theory says the infimum of Re J(alpha, u(z)) over a closed disk inside
the domain cap is attained at the positive real boundary point.  These
scans check that literally: sample the boundary circle, confirm the argmin
sits at angle ~0, and confirm the computed radius separates min > beta
from min < beta.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .bessel import Order
from .errors import CapExceeded, OutOfInterval, PreconditionViolated
from .functional import (
    Family,
    FunctionalParams,
    RatioForm,
    eval_functional,
    eval_ratio_complex,
    functional_domain_cap,
)

__all__ = ["CircleScan", "RadiusVerification", "min_re_on_circle", "verify_radius"]

_INTERIOR_SPOT_CHECKS = 128
_SPOT_SEED = 20260823


@dataclass(frozen=True)
class CircleScan:
    family: Family
    order: Order
    alpha: float
    r: float
    samples: int
    min_value: float
    argmin_angle: float

    @property
    def angle_step(self) -> float:
        return 2.0 * math.pi / self.samples


def min_re_on_circle(
    family: Family, order: Order, alpha: float, r: float, samples: int = 512
) -> CircleScan:
    """Minimum of Re J(alpha, u(z)) over |z| = r and where it occurs."""
    if samples < 64:
        raise PreconditionViolated("need samples >= 64")
    cap = functional_domain_cap(family, order)
    if not 0.0 < r < cap:
        raise OutOfInterval(f"r={r} outside (0, {cap:.12g})")
    best = math.inf
    best_k = 0
    for k in range(samples):
        theta = 2.0 * math.pi * k / samples
        z = complex(r * math.cos(theta), r * math.sin(theta))
        val = eval_ratio_complex(family, order, alpha, z).real
        if val < best:
            best, best_k = val, k
    return CircleScan(family, order, alpha, r, samples, best, 2.0 * math.pi * best_k / samples)


@dataclass(frozen=True)
class RadiusVerification:
    inner: CircleScan
    outer: CircleScan | None
    beta: float
    inner_margin: float
    outer_margin: float
    argmin_ok: bool
    interior_ok: bool
    cap_divergence: float | None

    @property
    def passed(self) -> bool:
        return (
            self.inner_margin > 0
            and self.outer_margin > 0
            and self.argmin_ok
            and self.interior_ok
        )


def _argmin_near_zero(scan: CircleScan) -> bool:
    d = scan.argmin_angle % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d) <= scan.angle_step + 1e-12


def verify_radius(
    family: Family,
    order: Order,
    params: FunctionalParams,
    radius: float,
    margin: float,
    samples: int = 512,
) -> RadiusVerification:
    """Sharpness check: Re J > beta just inside the radius, < beta just outside."""
    if not 0 < margin < 0.1:
        raise PreconditionViolated("margin must lie in (0, 0.1)")
    cap = functional_domain_cap(family, order)
    if radius > cap:
        raise CapExceeded(f"radius {radius:.12g} is beyond the cap {cap:.12g}")
    samples = max(samples, 512)
    r_in = (1.0 - margin) * radius
    inner = min_re_on_circle(family, order, params.alpha, r_in, samples)

    cap_divergence = None
    outer = None
    r_out = (1.0 + margin) * radius
    if r_out >= cap:
        # radius hugs the cap; check the near-cap value on the real axis instead
        cap_divergence = eval_functional(
            family, order, params.alpha, 0.999 * cap, RatioForm()
        )
        if cap_divergence < params.beta:
            outer_margin = params.beta - cap_divergence
        else:
            # root at the cap itself (alpha = 0): no exterior exists inside
            # the domain, so accept when the boundary value has decayed to
            # within `margin` of beta
            outer_margin = margin - (cap_divergence - params.beta)
    else:
        outer = min_re_on_circle(family, order, params.alpha, r_out, samples)
        outer_margin = params.beta - outer.min_value

    rng = random.Random(_SPOT_SEED)
    interior_ok = True
    for _ in range(_INTERIOR_SPOT_CHECKS):
        rho = r_in * math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        z = complex(rho * math.cos(theta), rho * math.sin(theta))
        if abs(z) < 1e-12:
            continue
        val = eval_ratio_complex(family, order, params.alpha, z).real
        if val < inner.min_value - 1e-9:
            interior_ok = False
            break

    argmin_ok = _argmin_near_zero(inner) and (outer is None or _argmin_near_zero(outer))
    return RadiusVerification(
        inner=inner,
        outer=outer,
        beta=params.beta,
        inner_margin=inner.min_value - params.beta,
        outer_margin=outer_margin,
        argmin_ok=argmin_ok,
        interior_ok=interior_ok,
        cap_divergence=cap_divergence,
    )
