"""Aggregated numerical verification of every claim the solver relies on.

Each check returns a margin: the distance by which the claim holds (negative
means failure).  The report is machine-readable and drives the CLI exit code.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .bessel import Order
from .figures import FIGURES
from .functional import (
    Family,
    FunctionalParams,
    RatioForm,
    ZeroSum,
    d_dalpha_functional,
    eval_functional,
    functional_domain_cap,
    lemma21_gap,
    radius_alpha_convexity,
    starlikeness_radius_h,
)
from .oracle import verify_radius
from .zeros import verify_interlacing

__all__ = ["GridSpec", "VerifyCheck", "VerificationReport", "run_verification"]

DUAL_METHOD_TOL = 1e-8
LEMMA_SLACK = 1e-12
DIVERGENCE_LEVEL = -10.0

_DEFAULT_INTERLACING_NUS = (-0.9, -0.5, 0.25, 0.5, 1.0, 2.0, 5.0)
_DEFAULT_DUAL_ALPHAS = (0.0, 0.25, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class GridEntry:
    family: Family
    nu: float
    beta: float
    alphas: tuple[float, ...]


def _default_entries() -> tuple[GridEntry, ...]:
    return tuple(
        GridEntry(s.family, s.nu, s.beta, s.alphas) for s in FIGURES.values()
    )


@dataclass(frozen=True)
class GridSpec:
    entries: tuple[GridEntry, ...] = field(default_factory=_default_entries)
    interlacing_nus: tuple[float, ...] = _DEFAULT_INTERLACING_NUS
    count: int = 10
    dual_alphas: tuple[float, ...] = _DEFAULT_DUAL_ALPHAS
    dual_r_points: int = 20
    r_monotone_points: int = 50
    samples: int = 512
    lemma_trials: int = 10_000
    lemma_seed: int = 715


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    passed: bool
    margin: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "margin": float(format(float(self.margin), ".15g")),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[VerifyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _check_interlacing(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for nu in grid.interlacing_nus:
        report = verify_interlacing(Order(nu), grid.count)
        margin = min(c.margin for c in report.checks)
        out.append(
            VerifyCheck(
                f"interlacing nu={nu}",
                report.passed,
                margin,
                f"{len(report.checks)} strict inequalities up to n={grid.count}",
            )
        )
    return out


def _check_dual_method(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for e in grid.entries:
        order = Order(e.nu)
        cap = functional_domain_cap(e.family, order)
        worst = 0.0
        for alpha in grid.dual_alphas:
            for k in range(grid.dual_r_points):
                r = 0.1 + (0.95 * cap - 0.1) * k / (grid.dual_r_points - 1)
                a = eval_functional(e.family, order, alpha, r, RatioForm())
                b = eval_functional(e.family, order, alpha, r, ZeroSum())
                worst = max(worst, abs(a - b))
        out.append(
            VerifyCheck(
                f"dual-method {e.family.value} nu={e.nu}",
                worst < DUAL_METHOD_TOL,
                DUAL_METHOD_TOL - worst,
                f"worst |RatioForm - ZeroSum| = {worst:.3e}",
            )
        )
    return out


def _check_monotone_r(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for e in grid.entries:
        order = Order(e.nu)
        cap = functional_domain_cap(e.family, order)
        worst = math.inf
        for alpha in e.alphas:
            prev = None
            for k in range(grid.r_monotone_points):
                r = cap * (0.01 + 0.97 * k / (grid.r_monotone_points - 1))
                val = eval_functional(e.family, order, alpha, r, RatioForm())
                if prev is not None:
                    worst = min(worst, prev - val)
                prev = val
        out.append(
            VerifyCheck(
                f"J decreasing in r, {e.family.value} nu={e.nu}",
                worst > 0,
                worst,
                f"smallest decrement over {grid.r_monotone_points} samples",
            )
        )
    return out


def _check_monotone_alpha(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for e in grid.entries:
        order = Order(e.nu)
        cap = functional_domain_cap(e.family, order)
        worst = math.inf
        for k in range(1, 10):
            r = cap * k / 10.0
            worst = min(worst, -d_dalpha_functional(e.family, order, r))
            alphas = sorted(set(e.alphas))
            vals = [
                eval_functional(e.family, order, a, r, RatioForm()) for a in alphas
            ]
            for hi, lo in zip(vals, vals[1:]):
                worst = min(worst, hi - lo)
        out.append(
            VerifyCheck(
                f"J decreasing in alpha, {e.family.value} nu={e.nu}",
                worst > 0,
                worst,
                "d/dalpha < 0 and sampled alpha slices ordered",
            )
        )
    return out


def _radii(e: GridEntry) -> dict[float, float]:
    order = Order(e.nu)
    alphas = sorted(set(e.alphas) | {0.0, 1.0})
    return {
        a: radius_alpha_convexity(e.family, order, FunctionalParams(a, e.beta)).radius
        for a in alphas
    }


def _check_sandwich(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for e in grid.entries:
        radii = _radii(e)
        alphas = sorted(radii)
        worst = math.inf
        for a1, a2 in zip(alphas, alphas[1:]):
            worst = min(worst, radii[a1] - radii[a2])
        for a in alphas:
            if 0.0 < a < 1.0:
                worst = min(worst, radii[a] - radii[1.0], radii[0.0] - radii[a])
        out.append(
            VerifyCheck(
                f"radii decreasing+sandwich, {e.family.value} nu={e.nu} beta={e.beta}",
                worst > 0,
                worst,
                f"radii: {', '.join(f'{a}:{radii[a]:.9f}' for a in alphas)}",
            )
        )
    return out


def _check_divergence(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for e in grid.entries:
        order = Order(e.nu)
        cap = functional_domain_cap(e.family, order)
        worst = -math.inf
        for alpha in [a for a in e.alphas if a > 0.01]:
            worst = max(
                worst, eval_functional(e.family, order, alpha, 0.999 * cap, RatioForm())
            )
        out.append(
            VerifyCheck(
                f"divergence at cap, {e.family.value} nu={e.nu}",
                worst < DIVERGENCE_LEVEL,
                DIVERGENCE_LEVEL - worst,
                f"largest J(alpha, u(0.999 cap)) = {worst:.3f}",
            )
        )
    return out


def _check_lemma_gap(grid: GridSpec) -> VerifyCheck:
    rng = random.Random(grid.lemma_seed)
    worst = math.inf
    for _ in range(grid.lemma_trials):
        lam = 1.0 - 4.0 * rng.random()  # includes lambda < 0
        b = 0.1 + 4.0 * rng.random()
        a = b + 0.05 + 4.0 * rng.random()
        rho = b * rng.random() * 0.999
        theta = 2.0 * math.pi * rng.random()
        z = complex(rho * math.cos(theta), rho * math.sin(theta))
        worst = min(worst, lemma21_gap(lam, a, b, z))
    return VerifyCheck(
        "lemma gap >= 0",
        worst >= -LEMMA_SLACK,
        worst + LEMMA_SLACK,
        f"smallest gap over {grid.lemma_trials} admissible tuples: {worst:.3e}",
    )


def _check_circle_oracle(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for e in grid.entries:
        order = Order(e.nu)
        for alpha in e.alphas:
            params = FunctionalParams(alpha, e.beta)
            res = radius_alpha_convexity(e.family, order, params)
            ver = verify_radius(e.family, order, params, res.radius, 0.02, grid.samples)
            out.append(
                VerifyCheck(
                    f"circle oracle {e.family.value} nu={e.nu} alpha={alpha}",
                    ver.passed,
                    min(ver.inner_margin, ver.outer_margin),
                    f"min Re at 0.98r: {ver.inner.min_value:.6f} > beta={e.beta}; "
                    f"argmin ok: {ver.argmin_ok}; interior ok: {ver.interior_ok}",
                )
            )
    return out


def _check_h_starlike(grid: GridSpec) -> list[VerifyCheck]:
    out = []
    for nu in (-0.5, 0.5, 2.0):
        order = Order(nu)
        worst = -math.inf
        for beta in (0.0, 0.29, 0.5):
            solver = radius_alpha_convexity(
                Family.H, order, FunctionalParams(0.0, beta)
            ).radius
            direct = starlikeness_radius_h(order, beta)
            worst = max(worst, abs(solver - direct))
        out.append(
            VerifyCheck(
                f"corrected h starlikeness nu={nu}",
                worst < 1e-9,
                1e-9 - worst,
                f"worst |solver - Dini root| = {worst:.3e}",
            )
        )
    return out


def run_verification(grid: GridSpec | None = None) -> VerificationReport:
    """Run every verification suite on the grid and aggregate a report."""
    if grid is None:
        grid = GridSpec()
    for e in grid.entries:
        e.family.validate_order(Order(e.nu))  # fail fast on bad grids
    checks: list[VerifyCheck] = []
    checks += _check_interlacing(grid)
    checks += _check_dual_method(grid)
    checks += _check_monotone_r(grid)
    checks += _check_monotone_alpha(grid)
    checks += _check_sandwich(grid)
    checks += _check_divergence(grid)
    checks.append(_check_lemma_gap(grid))
    checks += _check_circle_oracle(grid)
    checks += _check_h_starlike(grid)
    return VerificationReport(tuple(checks))
