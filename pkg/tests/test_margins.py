import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrig.inequalities.margins import (
    ZHU_SUN_ALPHA,
    cos_power_minus_one,
    cos_redheffer_margin,
    gen_redheffer_margin,
    k_bound_margin,
    k_kajikiya,
    k_over_x2,
    multiple_angle_pi_residual,
    multiple_angle_residual,
    quintic_K,
    quintic_K_half_pi,
    quintic_K_prime,
    redheffer_k_bound,
    redheffer_margin,
    taylor_k_margin,
    zhu_sun_margins,
)
from gentrig.special import DomainError, cos_pq, pi_pq, sin_pq

PI = math.pi
open_pi = st.floats(min_value=1e-6, max_value=PI - 1e-6)


def mp_R(x):
    x = mpmath.mpf(x)
    return (mpmath.pi**2 - x**2) / (mpmath.pi**2 + x**2)


def mp_k(x):
    x = mpmath.mpf(x)
    q = mpmath.pi**2 - mpmath.pi * x + x**2
    return x**2 * (mpmath.pi - x) ** 2 - q * mpmath.sin(x) ** 2


# --- classical Redheffer and its two-sided form ------------------------------------


def test_redheffer_examples():
    assert redheffer_margin(PI / 2) == pytest.approx(2 / PI - 0.6, rel=1e-14)
    assert redheffer_margin(PI / 2) == pytest.approx(0.036620, abs=1e-6)
    assert abs(redheffer_margin(1e-9)) < 1e-17
    assert abs(redheffer_margin(PI - 1e-9)) < 1e-9


def test_redheffer_domain():
    for x in (0.0, PI, -1.0, 4.0):
        with pytest.raises(DomainError):
            redheffer_margin(x)


@pytest.mark.parametrize("x", [1e-7, 1e-3, 0.3, 1.5, 3.0, PI - 1e-7])
def test_redheffer_vs_mpmath(x):
    with mpmath.workdps(40):
        ref = mpmath.sin(x) / x - mp_R(x)
        assert redheffer_margin(x) == pytest.approx(float(ref), rel=1e-9)


@pytest.mark.parametrize("x", [1e-7, 1e-3, 0.3, 0.49, 0.51, 2.0, 3.0])
def test_zhu_sun_vs_mpmath(x):
    with mpmath.workdps(40):
        sinc = mpmath.sin(x) / x
        up_ref = mp_R(x) ** mpmath.mpf(ZHU_SUN_ALPHA) - sinc
        low_ref = sinc - mp_R(x) ** mpmath.mpf(0.9)
        up, low = zhu_sun_margins(x, ZHU_SUN_ALPHA, 0.9)
        # the sharp upper margin starts at order x^6; compare on an absolute scale
        assert up == pytest.approx(float(up_ref), rel=1e-6, abs=1e-22)
        assert low == pytest.approx(float(low_ref), rel=1e-9)


def test_zhu_sun_beta_one_is_redheffer():
    xs = np.linspace(0.01, 3.1, 50)
    assert np.array_equal(zhu_sun_margins(xs)[1], redheffer_margin(xs))


def test_zhu_sun_sharp_upper_nonnegative():
    xs = np.linspace(1e-9, PI - 1e-9, 100_000)
    up, low = zhu_sun_margins(xs)
    assert np.all(up >= 0)
    assert np.all(low > 0)


def test_zhu_sun_nonsharp_exponents_fail():
    xs = np.linspace(1e-3, PI - 1e-3, 2000)
    up, _ = zhu_sun_margins(xs, alpha=0.9)
    assert up.min() < 0
    _, low = zhu_sun_margins(xs, beta=0.99)
    assert low.min() < 0


# --- k(x) and the quintic ------------------------------------------------------------


def test_k_examples():
    x = PI / 2
    assert k_kajikiya(x) == pytest.approx(PI**4 / 16 - 3 * PI**2 / 4, rel=1e-14)
    assert k_kajikiya(x) == pytest.approx(-1.314135, abs=1e-6)
    assert k_over_x2(x) == pytest.approx((PI**4 / 16 - 3 * PI**2 / 4) / x**2, rel=1e-14)
    assert k_over_x2(x) == pytest.approx(-0.532599, abs=1e-6)
    assert redheffer_k_bound(x) == pytest.approx(-(PI**2) / 50, rel=1e-14)
    assert k_over_x2(x) <= redheffer_k_bound(x)
    assert -1e-8 < redheffer_k_bound(1e-9) < 0
    assert -1e-30 < redheffer_k_bound(PI - 1e-9) < 0


@pytest.mark.parametrize("x", [1e-6, 0.01, 0.7, 1.6, 3.0, PI - 1e-4, PI - 1e-8])
def test_k_vs_mpmath(x):
    with mpmath.workdps(50):
        k = mp_k(x)
        assert k_kajikiya(x) == pytest.approx(float(k), rel=1e-9)
        assert k_over_x2(x) == pytest.approx(float(k / mpmath.mpf(x) ** 2), rel=1e-9)
        bound = -mpmath.pi * x * (mpmath.pi - x) ** 4 / (mpmath.pi**2 + x**2) ** 2
        assert k_bound_margin(x) == pytest.approx(float(bound - k / mpmath.mpf(x) ** 2), rel=1e-8)


def test_k_stable_forms_agree_with_direct_at_moderate_x():
    xs = np.linspace(0.5, 2.6, 200)
    q = PI**2 - PI * xs + xs**2
    direct = xs**2 * (PI - xs) ** 2 - q * np.sin(xs) ** 2
    assert np.allclose(k_kajikiya(xs), direct, rtol=1e-12, atol=1e-13)


@settings(max_examples=200, deadline=None)
@given(open_pi)
def test_k_negative_and_below_bound(x):
    assert k_kajikiya(x) < 0
    assert k_bound_margin(x) >= 0


def test_quintic_values():
    assert quintic_K(0.0) == pytest.approx(36 * PI, rel=1e-15)
    assert quintic_K(0.0) == pytest.approx(113.097, abs=1e-3)
    assert quintic_K(PI / 2) == pytest.approx(quintic_K_half_pi(), rel=1e-13)
    assert quintic_K_half_pi() == pytest.approx(2.25844, abs=5e-5)


def test_quintic_identity():
    # x^2 (pi-x)^2 - Q (x - x^3/6)^2 = -x^3 K(x) / 36 as polynomials
    xs = np.linspace(-2, 5, 57)
    q = PI**2 - PI * xs + xs**2
    lhs = xs**2 * (PI - xs) ** 2 - q * (xs - xs**3 / 6) ** 2
    assert np.allclose(lhs, -(xs**3) * quintic_K(xs) / 36, rtol=1e-12, atol=1e-10)


def test_quintic_derivative_matches_fd():
    xs = np.linspace(0.1, 3.0, 30)
    h = 1e-5
    fd = (quintic_K(xs + h) - quintic_K(xs - h)) / (2 * h)
    assert np.allclose(quintic_K_prime(xs), fd, rtol=1e-7, atol=1e-7)


def test_quintic_decreasing_on_half_period():
    xs = np.linspace(0, PI / 2, 10_001)
    assert np.all(quintic_K_prime(xs) < 0)


@pytest.mark.parametrize("x", [1e-4, 0.2, 0.6, 1.5])
def test_taylor_margin_vs_mpmath(x):
    with mpmath.workdps(50):
        xm = mpmath.mpf(x)
        K = xm**5 - mpmath.pi * xm**4 - (12 - mpmath.pi**2) * xm**3 + 12 * mpmath.pi * xm**2 - 12 * mpmath.pi**2 * xm + 36 * mpmath.pi
        ref = -(xm**3) * K / 36 - mp_k(x)
        assert taylor_k_margin(x) == pytest.approx(float(ref), rel=1e-8)
        assert taylor_k_margin(x) > 0


# --- generalized families -------------------------------------------------------------


@pytest.mark.parametrize("pq", [(2, 2), (3, 2.5), (5, 5)])
def test_gen_redheffer_vs_direct(pq):
    P = pi_pq(pq)
    xs = np.linspace(0.2 * P, 0.95 * P, 40)
    direct = sin_pq(pq, xs) / xs - (P**2 - xs**2) / (P**2 + xs**2)
    assert np.allclose(gen_redheffer_margin(pq, xs), direct, rtol=1e-10, atol=1e-14)


def test_gen_redheffer_classical_pair():
    xs = np.linspace(0.01, 3.1, 50)
    assert np.allclose(gen_redheffer_margin((2, 2), xs), redheffer_margin(xs), rtol=1e-12, atol=1e-15)


def test_gen_redheffer_hypotheses():
    with pytest.raises(DomainError):
        gen_redheffer_margin((1.5, 2), 0.5)
    assert isinstance(gen_redheffer_margin((1.5, 2), 0.5, check_hypotheses=False), float)


def test_gen_redheffer_endpoints():
    pq = (3, 2.5)
    P = pi_pq(pq)
    assert abs(gen_redheffer_margin(pq, 1e-9)) < 1e-15
    assert abs(gen_redheffer_margin(pq, P - 1e-9)) < 1e-8


@pytest.mark.parametrize("pq", [(2, 2), (4, 2), (1.5, 3), (4 / 3, 4), (10, 4)])
def test_cos_redheffer_vs_direct(pq):
    P = pi_pq(pq)
    xs = np.linspace(0.2 * P, 0.95 * P, 40)
    direct = cos_pq(pq, xs / 2) ** (pq[0] - 1) - (P**2 - xs**2) / (P**2 + xs**2)
    assert np.allclose(cos_redheffer_margin(pq, xs), direct, rtol=1e-10, atol=1e-13)
    assert np.all(cos_redheffer_margin(pq, xs) > 0)


def test_cos_redheffer_classical_is_half_angle():
    xs = np.linspace(0.1, 3.0, 30)
    assert np.allclose(cos_redheffer_margin((2, 2), xs), np.cos(xs / 2) - (PI**2 - xs**2) / (PI**2 + xs**2))


def test_cos_redheffer_hypotheses():
    with pytest.raises(DomainError):
        cos_redheffer_margin((1.2, 2), 0.5)
    with pytest.raises(DomainError):
        cos_redheffer_margin((3, 1.5), 0.5)


def test_cos_power_minus_one():
    pq = (3.0, 2.0)
    for x in (1e-6, 0.1, 0.8):
        direct = cos_pq(pq, x) ** 2 - 1
        assert cos_power_minus_one(pq, x) == pytest.approx(direct, rel=1e-6)


@pytest.mark.parametrize("q", [2.0, 3.0, 4.0, 7.5])
def test_multiple_angle(q):
    qc = q / (q - 1)
    xs = np.linspace(1e-6, pi_pq((qc, q)) * (1 - 1e-9), 1000)
    assert np.max(np.abs(multiple_angle_residual(q, xs))) <= 1e-8
    assert abs(multiple_angle_pi_residual(q)) <= 1e-12


def test_multiple_angle_needs_q_at_least_two():
    with pytest.raises(DomainError):
        multiple_angle_residual(1.5, 0.3)
