import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrig.special import (
    DomainError,
    ParamPair,
    argument_reduce,
    beta,
    cos_pq,
    incomplete_F,
    pi_p,
    pi_pq,
    sin_deficit_ratio,
    sin_pq,
    sinc_m1,
    sincos_pq,
)

mpmath.mp.dps = 30

exponent = st.floats(min_value=1.2, max_value=8.0)
pairs = st.tuples(exponent, exponent)


def quad_F(p, q, x):
    """Oracle: the defining integral with t = x(1 - s^2) to tame the endpoint."""
    p, q, x = mpmath.mpf(p), mpmath.mpf(q), mpmath.mpf(x)
    if x == 1:
        # t = 1 - s^2 removes the (1-t)^(-1/p) singularity
        f = lambda s: 2 * s * (-mpmath.expm1(q * mpmath.log1p(-s * s))) ** (-1 / p)
        return float(mpmath.quad(f, [0, 1]))
    return float(mpmath.quad(lambda t: (1 - t**q) ** (-1 / p), [0, x]))


def test_beta_values():
    assert beta(1, 1) == pytest.approx(1.0, abs=1e-15)
    assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-15)
    assert 2 / 2 * beta(0.5, 0.5) == pytest.approx(pi_pq((2, 2)), rel=1e-15)


@pytest.mark.parametrize("a,b", [(0.3, 2.5), (1.7, 0.2), (5.0, 5.0)])
def test_beta_matches_mpmath(a, b):
    assert beta(a, b) == pytest.approx(float(mpmath.beta(a, b)), rel=1e-13)


@pytest.mark.parametrize("a,b", [(0, 1), (1, -1), (float("nan"), 1)])
def test_beta_domain(a, b):
    with pytest.raises(DomainError):
        beta(a, b)


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
def test_F_is_arcsin_for_classical_pair(x):
    assert incomplete_F((2, 2), x) == pytest.approx(math.asin(x), rel=1e-14)


def test_F_at_zero_and_one():
    assert incomplete_F((3, 1.7), 0.0) == 0.0
    assert incomplete_F((3, 3), 1.0) == pytest.approx(pi_pq((3, 3)) / 2, rel=1e-15)
    assert incomplete_F((3, 3), 1.0) == pytest.approx(quad_F(3, 3, 1), rel=1e-12)


@pytest.mark.parametrize("pq", [(3, 4), (1.5, 3), (4, 1.5), (10, 2)])
@pytest.mark.parametrize("x", [0.05, 0.4, 0.8, 0.99, 1 - 1e-9])
def test_F_matches_quadrature(pq, x):
    assert incomplete_F(pq, x) == pytest.approx(quad_F(*pq, x), rel=1e-11)


def test_F_domain():
    with pytest.raises(DomainError):
        incomplete_F((2, 2), 1.5)
    with pytest.raises(DomainError):
        incomplete_F((2, 2), -0.1)


def test_pi_values():
    assert pi_pq((2, 2)) == pytest.approx(math.pi, rel=1e-15)
    assert pi_pq((4, 4)) == pytest.approx(math.pi / math.sqrt(2), rel=1e-14)
    for p in (3.0, 4.0):
        assert pi_pq((p, p)) == pytest.approx(2 * math.pi / (p * math.sin(math.pi / p)), rel=1e-14)
        assert pi_p(p) == pytest.approx(pi_pq((p, p)), rel=1e-14)
    assert pi_pq((3, 2)) == pytest.approx(2 * quad_F(3, 2, 1), rel=1e-12)


@pytest.mark.parametrize("pq", [(1.0, 2.0), (2.0, 0.5), (float("inf"), 2.0), (2.0, 2e6)])
def test_param_domain(pq):
    with pytest.raises(DomainError):
        ParamPair(*pq)


def test_conjugates():
    pq = ParamPair(3.0, 1.5)
    assert pq.p_conj == pytest.approx(1.5)
    assert pq.q_conj == pytest.approx(3.0)


def test_argument_reduce_examples():
    r = argument_reduce((2, 2), math.pi + math.pi / 6)
    assert r.reduced_x == pytest.approx(math.pi / 6, abs=1e-15)
    assert r.sin_sign == -1
    assert tuple(argument_reduce((3, 4), 0.0)) == (0.0, 1, 1)
    r = argument_reduce((2, 2), -math.pi / 3)
    assert r.reduced_x == pytest.approx(math.pi / 3, abs=1e-15)
    assert (r.sin_sign, r.cos_sign) == (-1, 1)


def test_argument_reduce_many_periods():
    # the period is a double, so the error grows like |x| * ulp(pi); 1e4 periods stays below 1e-10
    x = 1e4 * 2 * math.pi + 0.3
    assert sin_pq((2, 2), x) == pytest.approx(math.sin(x), abs=1e-10)


@pytest.mark.parametrize("x", [5e-324, 1e-300, 1e-200, 1e-20, 1e-8])
def test_tiny_arguments(x):
    for pq in [(2, 2), (1.2, 7.0), (7.0, 1.2)]:
        assert sin_pq(pq, x) == pytest.approx(x - x ** (pq[1] + 1) / (pq[0] * (pq[1] + 1)), rel=1e-14)
        P = pi_pq(pq)
        s, c = sincos_pq(pq, P / 2 - x * P)
        assert abs(c) ** pq[0] + abs(s) ** pq[1] == pytest.approx(1.0, abs=1e-14)
        assert 0.0 <= c < 1.0


def test_sin_cos_examples():
    for pq in [(2, 2), (3, 4), (1.5, 3), (5, 1.3)]:
        P = pi_pq(pq)
        assert sin_pq(pq, 0.0) == 0.0
        assert sin_pq(pq, P / 2) == pytest.approx(1.0, abs=1e-15)
        assert cos_pq(pq, 0.0) == 1.0
        assert cos_pq(pq, P / 2) == pytest.approx(0.0, abs=1e-12)
    assert sin_pq((2, 2), math.pi / 6) == pytest.approx(0.5, rel=1e-15)
    assert cos_pq((2, 2), math.pi / 3) == pytest.approx(0.5, rel=1e-14)
    assert sin_pq((3, 4), incomplete_F((3, 4), 0.7)) == pytest.approx(0.7, rel=1e-14)


def test_classical_pair_matches_numpy():
    xs = np.linspace(-20, 20, 2001)
    s, c = sincos_pq((2, 2), xs)
    assert np.max(np.abs(s - np.sin(xs))) < 1e-13
    assert np.max(np.abs(c - np.cos(xs))) < 1e-13


def test_scalar_and_array_shapes():
    assert isinstance(sin_pq((3, 2), 0.4), float)
    out = sin_pq((3, 2), np.zeros((2, 3)))
    assert out.shape == (2, 3)


def test_nonfinite_argument():
    with pytest.raises(DomainError):
        sin_pq((2, 2), float("nan"))


def test_sinc_m1():
    xs = np.array([1e-8, 1e-3, 0.2, 0.3, 2.0])
    ref = np.array([float(mpmath.sin(x) / x - 1) for x in xs])
    assert np.allclose(sinc_m1(xs), ref, rtol=1e-13, atol=0)


def test_sin_deficit_ratio_vs_mpmath():
    pq = (3.0, 2.5)
    for x in (1e-6, 1e-3, 0.5):
        y = sin_pq(pq, x)
        mpmath.mp.dps = 40
        # invert F at high precision: x - y = F(y) - y
        Fy = mpmath.quad(lambda t: (1 - t**2.5) ** (-mpmath.mpf(1) / 3), [0, y])
        ref = float((Fy - y) / x)
        mpmath.mp.dps = 30
        assert sin_deficit_ratio(pq, x) == pytest.approx(ref, rel=1e-8)


# --- properties -----------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(pairs, st.floats(min_value=-30, max_value=30))
def test_odd(pq, x):
    assert sin_pq(pq, -x) == pytest.approx(-sin_pq(pq, x), abs=1e-12)
    assert cos_pq(pq, -x) == pytest.approx(cos_pq(pq, x), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(pairs, st.floats(min_value=-10, max_value=10))
def test_antiperiodic(pq, x):
    P = pi_pq(pq)
    assert sin_pq(pq, x + P) == pytest.approx(-sin_pq(pq, x), abs=1e-11)


@settings(max_examples=60, deadline=None)
@given(pairs, st.floats(min_value=0, max_value=1))
def test_reflection(pq, frac):
    P = pi_pq(pq)
    x = frac * P / 2
    assert sin_pq(pq, P - x) == pytest.approx(sin_pq(pq, x), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(pairs)
def test_monotone_on_quarter_period(pq):
    xs = np.linspace(0, pi_pq(pq) / 2, 500)
    s = sin_pq(pq, xs)
    assert np.all(np.diff(s) >= 0)


@settings(max_examples=60, deadline=None)
@given(pairs, st.floats(min_value=-20, max_value=20))
def test_pythagorean(pq, x):
    s, c = sincos_pq(pq, x)
    assert abs(abs(c) ** pq[0] + abs(s) ** pq[1] - 1) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(pairs, st.floats(min_value=0, max_value=0.999))
def test_round_trip(pq, y):
    assert sin_pq(pq, incomplete_F(pq, y)) == pytest.approx(y, abs=1e-9)


def fd_order(pq, x, h=1e-2):
    """Observed convergence order of the central difference of sin against cos."""
    exact = cos_pq(pq, x)
    errs = [abs((sin_pq(pq, x + hh) - sin_pq(pq, x - hh)) / (2 * hh) - exact) for hh in (h, h / 2)]
    return math.log2(errs[0] / errs[1])


@pytest.mark.parametrize("pq", [(2, 2), (3, 4), (1.5, 3), (4, 1.5)])
def test_derivative_of_sin_is_cos(pq):
    assert fd_order(pq, 0.3 * pi_pq(pq)) >= 1.9
