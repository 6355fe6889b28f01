"""Acceptance gate: nine criteria, each printed as a single pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines inline.
"""

import math
import random
import time

from bessel_radii.bessel import Order
from bessel_radii.figures import FIGURES, figure_csv
from bessel_radii.functional import (
    Family,
    FunctionalParams,
    RatioForm,
    ZeroSum,
    eval_functional,
    functional_domain_cap,
    lemma21_gap,
    radius_alpha_convexity,
    starlikeness_radius_h,
)
from bessel_radii.oracle import verify_radius
from bessel_radii.zeros import ZeroKind, compute_zeros, verify_interlacing

FIGURE_CASES = [(s.family, s.nu, s.beta, s.alphas) for s in FIGURES.values()]


def _finish(num: int, name: str, ok: bool, t0: float, budget: float, detail: str = ""):
    elapsed = time.perf_counter() - t0
    in_budget = elapsed < budget
    status = "PASS" if (ok and in_budget) else "FAIL"
    print(f"[{status}] criterion {num}: {name} ({elapsed:.2f}s / {budget:.0f}s) {detail}")
    assert ok, f"criterion {num} ({name}) failed: {detail}"
    assert in_budget, f"criterion {num} exceeded {budget}s budget ({elapsed:.2f}s)"


def test_criterion_1_closed_form_zeros():
    t0 = time.perf_counter()
    j = compute_zeros(ZeroKind.BESSEL_J, Order(0.5), 10)
    g = compute_zeros(ZeroKind.DINI_G, Order(0.5), 10)
    worst = max(
        max(abs(j[n] - n * math.pi) for n in range(1, 11)),
        max(abs(g[n] - (n - 0.5) * math.pi) for n in range(1, 11)),
    )
    _finish(1, "closed-form half-order zeros", worst < 1e-10, t0, 1.0,
            f"worst abs error {worst:.3e}")


def test_criterion_2_interlacing():
    t0 = time.perf_counter()
    worst = math.inf
    ok = True
    for nu in (-0.9, -0.5, 0.25, 0.5, 1.0, 2.0, 5.0):
        report = verify_interlacing(Order(nu), 10)
        ok = ok and report.passed
        worst = min(worst, min(c.margin for c in report.checks))
    _finish(2, "zero interlacing chains", ok and worst > 0, t0, 10.0,
            f"smallest margin {worst:.3e}")


def test_criterion_3_closed_form_radius():
    t0 = time.perf_counter()
    res = radius_alpha_convexity(Family.G, Order(0.5), FunctionalParams(0.0, 0.0))
    err = abs(res.radius - math.pi / 2)
    _finish(3, "radius(g, 1/2, 0, 0) = pi/2", err < 1e-9, t0, 1.0,
            f"abs error {err:.3e}")


def test_criterion_4_dual_method_agreement():
    t0 = time.perf_counter()
    worst = 0.0
    for family, nu, _, _ in FIGURE_CASES:
        order = Order(nu)
        cap = functional_domain_cap(family, order)
        for alpha in (0.0, 0.25, 0.5, 1.0, 2.0):
            for k in range(20):
                r = 0.1 + (0.95 * cap - 0.1) * k / 19
                a = eval_functional(family, order, alpha, r, RatioForm())
                b = eval_functional(family, order, alpha, r, ZeroSum(terms=500))
                worst = max(worst, abs(a - b))
    _finish(4, "series route vs pole-sum route", worst < 1e-8, t0, 60.0,
            f"worst disagreement {worst:.3e}")


def test_criterion_5_monotonicity_and_sandwich():
    t0 = time.perf_counter()
    worst = math.inf
    for family, nu, beta, alphas in FIGURE_CASES:
        order = Order(nu)
        radii = {
            a: radius_alpha_convexity(family, order, FunctionalParams(a, beta)).radius
            for a in sorted(set(alphas) | {0.0, 1.0})
        }
        keys = sorted(radii)
        for a1, a2 in zip(keys, keys[1:]):
            worst = min(worst, radii[a1] - radii[a2])
        for a in keys:
            if 0.0 < a < 1.0:
                worst = min(worst, radii[0.0] - radii[a], radii[a] - radii[1.0])
    _finish(5, "radii decreasing in alpha and sandwiched", worst > 1e-10, t0, 30.0,
            f"smallest margin {worst:.3e}")


def test_criterion_6_figure_reproduction():
    t0 = time.perf_counter()
    ok = True
    detail = ""
    for figure_id, spec in FIGURES.items():
        cap = functional_domain_cap(spec.family, Order(spec.nu))
        rows = [
            ln.split(",")
            for ln in figure_csv(figure_id, 200).strip().split("\n")
            if not ln.startswith("#")
        ][1:]
        cols = list(zip(*[[float(c) if c else None for c in row] for row in rows]))
        r_grid = cols[0]
        curves = cols[1:]
        # limit 1 at the origin
        if any(abs(curve[0] - 1.0) > 1e-5 for curve in curves):
            ok, detail = False, f"figure {figure_id}: origin limit violated"
        # strictly decreasing in r down each column
        for curve in curves:
            vals = [v for v in curve if v is not None]
            if any(a <= b for a, b in zip(vals, vals[1:])):
                ok, detail = False, f"figure {figure_id}: not decreasing in r"
        # strictly decreasing across columns in alpha at each r
        for i in range(len(r_grid)):
            vals = [curve[i] for curve in curves if curve[i] is not None]
            if any(a <= b for a, b in zip(vals, vals[1:])):
                ok, detail = False, f"figure {figure_id}: not decreasing in alpha"
        # divergence below -10 at 0.999 cap for alpha > 0.01
        i_cap = min(range(len(r_grid)), key=lambda i: abs(r_grid[i] - 0.999 * cap))
        for alpha, curve in zip(spec.alphas, curves):
            if alpha > 0.01 and not curve[i_cap] < -10.0:
                ok, detail = False, f"figure {figure_id}: no divergence at alpha={alpha}"
    _finish(6, "figure curves reproduce", ok, t0, 30.0, detail)


def test_criterion_7_oracle_sharpness():
    t0 = time.perf_counter()
    ok = True
    detail = ""
    for family, nu, beta, alphas in FIGURE_CASES:
        order = Order(nu)
        for alpha in alphas:
            params = FunctionalParams(alpha, beta)
            radius = radius_alpha_convexity(family, order, params).radius
            ver = verify_radius(family, order, params, radius, 0.02, samples=1024)
            if not ver.passed:
                ok = False
                detail = f"{family.value} nu={nu} alpha={alpha} not sharp"
    _finish(7, "disk oracle sharpness (15 combos)", ok, t0, 120.0, detail)


def test_criterion_8_lemma_gap():
    t0 = time.perf_counter()
    rng = random.Random(715)
    worst = math.inf
    for _ in range(10_000):
        lam = 1.0 - 4.0 * rng.random()
        b = 0.1 + 4.0 * rng.random()
        a = b + 0.05 + 4.0 * rng.random()
        rho = b * rng.random() * 0.999
        theta = 2.0 * math.pi * rng.random()
        z = complex(rho * math.cos(theta), rho * math.sin(theta))
        worst = min(worst, lemma21_gap(lam, a, b, z))
    _finish(8, "pole comparison gap nonnegative", worst >= -1e-12, t0, 5.0,
            f"smallest gap {worst:.3e}")


def test_criterion_9_corrected_h_starlikeness():
    t0 = time.perf_counter()
    worst = 0.0
    for nu in (-0.5, 0.5, 2.0):
        order = Order(nu)
        for beta in (0.0, 0.29, 0.5):
            solver = radius_alpha_convexity(
                Family.H, order, FunctionalParams(0.0, beta)
            ).radius
            worst = max(worst, abs(solver - starlikeness_radius_h(order, beta)))
    _finish(9, "h starlikeness radius vs direct root", worst < 1e-9, t0, 5.0,
            f"worst abs error {worst:.3e}")
