"""Disk-oracle tests: boundary minima, harmonic mean value, sharpness checks."""

import math

import pytest

from bessel_radii.bessel import Order
from bessel_radii.errors import CapExceeded, OutOfInterval, PreconditionViolated
from bessel_radii.functional import (
    Family,
    FunctionalParams,
    eval_ratio_complex,
    functional_domain_cap,
    radius_alpha_convexity,
)
from bessel_radii.oracle import min_re_on_circle, verify_radius

COT_1 = 0.642092615934330703006419986594  # min of Re(z cot z) on |z| = 1


class TestCircleScan:
    def test_g_half_alpha0_on_unit_circle(self):
        scan = min_re_on_circle(Family.G, Order(0.5), 0.0, 1.0, samples=1024)
        assert scan.min_value == pytest.approx(COT_1, abs=1e-9)
        d = scan.argmin_angle % (2.0 * math.pi)
        assert min(d, 2.0 * math.pi - d) <= scan.angle_step + 1e-12

    @pytest.mark.parametrize("family,nu", [(Family.F, 1.0), (Family.G, 0.5), (Family.H, -0.5)])
    def test_circle_mean_is_center_value(self, family, nu):
        # Re J is harmonic where the denominators are zero-free, so its
        # mean over a small circle equals the value 1 at the origin
        order = Order(nu)
        r = 0.3 * functional_domain_cap(family, order)
        n = 256
        total = 0.0
        for k in range(n):
            theta = 2.0 * math.pi * k / n
            z = complex(r * math.cos(theta), r * math.sin(theta))
            total += eval_ratio_complex(family, order, 0.6, z).real
        assert total / n == pytest.approx(1.0, abs=1e-6)

    def test_argument_validation(self):
        order = Order(1.0)
        with pytest.raises(PreconditionViolated):
            min_re_on_circle(Family.F, order, 0.5, 0.5, samples=32)
        with pytest.raises(OutOfInterval):
            min_re_on_circle(Family.F, order, 0.5, 5.0)


class TestVerifyRadius:
    @pytest.mark.parametrize("family,nu,beta,alpha", [
        (Family.F, 1.0, 0.45, 0.5),
        (Family.G, 0.5, 0.37, 1.0),
        (Family.H, -0.5, 0.29, 0.3),
    ])
    def test_sharpness_at_computed_radius(self, family, nu, beta, alpha):
        order = Order(nu)
        params = FunctionalParams(alpha, beta)
        radius = radius_alpha_convexity(family, order, params).radius
        ver = verify_radius(family, order, params, radius, 0.02)
        assert ver.passed
        assert ver.inner_margin > 0
        assert ver.outer_margin > 0
        assert ver.argmin_ok and ver.interior_ok

    def test_wrong_radius_fails(self):
        order = Order(1.0)
        params = FunctionalParams(0.5, 0.45)
        radius = radius_alpha_convexity(Family.F, order, params).radius
        assert not verify_radius(Family.F, order, params, 1.15 * radius, 0.02).passed
        assert not verify_radius(Family.F, order, params, 0.85 * radius, 0.02).passed

    def test_radius_at_cap_degrades_to_divergence_check(self):
        # alpha = 0, beta = 0 puts the radius at the cap itself
        order = Order(1.0)
        params = FunctionalParams(0.0, 0.0)
        radius = radius_alpha_convexity(Family.F, order, params).radius
        ver = verify_radius(Family.F, order, params, radius, 0.02)
        assert ver.outer is None
        assert ver.cap_divergence is not None
        assert ver.passed

    def test_validation(self):
        order = Order(1.0)
        params = FunctionalParams(0.5, 0.45)
        cap = functional_domain_cap(Family.F, order)
        with pytest.raises(CapExceeded):
            verify_radius(Family.F, order, params, cap * 1.01, 0.02)
        with pytest.raises(PreconditionViolated):
            verify_radius(Family.F, order, params, 0.5, 0.5)
