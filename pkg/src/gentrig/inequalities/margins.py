"""Margin functions for Redheffer-type inequalities and their relatives.

Every margin is arranged so that the claimed inequality reads margin > 0
(or >= 0), and is evaluated in a form that avoids cancellation near the
endpoints where both sides meet.
"""

from __future__ import annotations

import math

import numpy as np

from ..special import DomainError, ParamPair, sin_deficit_ratio, sin_pq, sincos_pq, sinc_m1

PI = math.pi
PI2 = math.pi**2
#: The sharp upper exponent of the two-sided Redheffer refinement.
ZHU_SUN_ALPHA = PI2 / 12.0
ZHU_SUN_BETA = 1.0


def _open_interval(x, hi, what):
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0.0)) or np.any(~(arr < hi)):
        raise DomainError(f"{what} needs x in (0, {hi!r})")
    return arr, arr.ndim == 0


def _out(arr, scalar):
    return float(arr) if scalar else arr


def _rational_m1(x, a):
    """(a^2 - x^2)/(a^2 + x^2) - 1."""
    return -2.0 * x * x / (a * a + x * x)


def _rational(x, a):
    """(a^2 - x^2)/(a^2 + x^2), factored for accuracy near x = a."""
    return (a - x) * (a + x) / (a * a + x * x)


def redheffer_margin(x):
    """sin(x)/x - (pi^2 - x^2)/(pi^2 + x^2) on (0, pi)."""
    arr, scalar = _open_interval(x, PI, "redheffer_margin")
    near0 = arr < 0.5 * PI
    out = np.where(
        near0,
        sinc_m1(arr) - _rational_m1(arr, PI),
        np.sin(arr) / arr - _rational(arr, PI),
    )
    return _out(out, scalar)


def _zhu_sun_upper_series(x, alpha, terms=12):
    """Power series of R^alpha - sin(x)/x in y = x^2/pi^2, R = (1-y)/(1+y)."""
    # alpha * log R = -2 alpha sum_{odd j} y^j / j
    z = [0.0] * (terms + 1)
    for j in range(1, terms + 1, 2):
        z[j] = -2.0 * alpha / j
    # exp of a power series with zero constant term
    e = [1.0] + [0.0] * terms
    for n in range(1, terms + 1):
        e[n] = sum(k * z[k] * e[n - k] for k in range(1, n + 1)) / n
    coeffs = [0.0] * (terms + 1)
    for k in range(1, terms + 1):
        s_k = (-1) ** k * PI2**k / math.factorial(2 * k + 1)
        coeffs[k] = e[k] - s_k
    y = x * x / PI2
    acc = np.zeros_like(y)
    for c in reversed(coeffs[1:]):
        acc = acc * y + c
    return acc * y


def zhu_sun_margins(x, alpha=ZHU_SUN_ALPHA, beta=ZHU_SUN_BETA):
    """(R^alpha - sin x/x, sin x/x - R^beta) with R = (pi^2-x^2)/(pi^2+x^2).

    Both are non-negative on (0, pi) iff alpha <= pi^2/12 and beta >= 1.
    """
    arr, scalar = _open_interval(x, PI, "zhu_sun_margins")
    near0 = arr < 0.5
    R = _rational(arr, PI)
    with np.errstate(divide="ignore", invalid="ignore"):
        upper = np.where(near0, 0.0, R**alpha - np.sin(arr) / arr)
    if near0.any():
        upper[near0] = _zhu_sun_upper_series(arr[near0], alpha)
    if beta == 1.0:
        lower = np.asarray(redheffer_margin(arr))
    else:
        head = arr < 0.5 * PI
        lower = np.where(
            head,
            sinc_m1(arr) - np.expm1(beta * np.log1p(_rational_m1(arr, PI))),
            np.sin(arr) / arr - R**beta,
        )
    return _out(upper, scalar), _out(lower, scalar)


def _k_over_x2_left(x):
    # (pi-x)^2 - q = -pi x exactly, leaving -q sm1 (2 + sm1) without cancellation
    q = PI2 - PI * x + x * x
    sm1 = sinc_m1(x)
    return -PI * x - q * sm1 * (2.0 + sm1)


def k_over_x2(x):
    """k(x)/x^2 = (pi-x)^2 - (pi^2 - pi x + x^2)(sin x/x)^2.

    The right half is evaluated through the symmetry k(x) = k(pi - x).
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0.0)) or np.any(arr > PI):
        raise DomainError("k_over_x2 needs x in (0, pi]")
    flat = np.atleast_1d(arr)
    out = np.zeros_like(flat)
    left = flat <= 0.5 * PI
    out[left] = _k_over_x2_left(flat[left])
    right = ~left & (flat < PI)
    e = PI - flat[right]
    out[right] = e * e * _k_over_x2_left(e) / (flat[right] * flat[right])
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def k_kajikiya(x):
    """k(x) = x^2 (pi-x)^2 - (pi^2 - pi x + x^2) sin^2 x on [0, pi]."""
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr >= 0.0)) or np.any(arr > PI):
        raise DomainError("k_kajikiya needs x in [0, pi]")
    flat = np.atleast_1d(arr)
    out = np.zeros_like(flat)
    e = np.minimum(flat, PI - flat)
    pos = e > 0
    out[pos] = e[pos] ** 2 * _k_over_x2_left(e[pos])
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def redheffer_k_bound(x):
    """-pi x (pi-x)^4 / (pi^2+x^2)^2, the Redheffer-derived bound on k(x)/x^2."""
    arr, scalar = _open_interval(x, PI, "redheffer_k_bound")
    return _out(-PI * arr * (PI - arr) ** 4 / (PI2 + arr * arr) ** 2, scalar)


def k_bound_margin(x):
    """bound - k(x)/x^2; positive where the Redheffer-based estimate is strict."""
    arr, scalar = _open_interval(x, PI, "k_bound_margin")
    flat = np.atleast_1d(arr)
    out = np.empty_like(flat)
    left = flat <= 0.5 * PI
    xl = flat[left]
    a = (PI - xl) ** 2 / (PI2 + xl * xl)
    a_m1 = -2.0 * PI * xl / (PI2 + xl * xl)
    q = PI2 - PI * xl + xl * xl
    sm1 = sinc_m1(xl)
    # bound = -pi x a^2 and k/x^2 = -pi x - q sm1 (2 + sm1)
    out[left] = -PI * xl * a_m1 * (a + 1.0) + q * sm1 * (2.0 + sm1)
    xr = flat[~left]
    out[~left] = redheffer_k_bound(xr) - k_over_x2(xr)
    return _out(out.reshape(arr.shape), scalar)


def quintic_K(x):
    """x^5 - pi x^4 - (12 - pi^2) x^3 + 12 pi x^2 - 12 pi^2 x + 36 pi."""
    x = np.asarray(x, dtype=float)
    out = ((((x - PI) * x - (12.0 - PI2)) * x + 12.0 * PI) * x - 12.0 * PI2) * x + 36.0 * PI
    return float(out) if out.ndim == 0 else out


def quintic_K_prime(x):
    """K'(x) = -(4 pi - 5x) x^3 - 3(12 - pi^2) x^2 - 12 pi (pi - 2x)."""
    x = np.asarray(x, dtype=float)
    out = -(4.0 * PI - 5.0 * x) * x**3 - 3.0 * (12.0 - PI2) * x**2 - 12.0 * PI * (PI - 2.0 * x)
    return float(out) if out.ndim == 0 else out


def quintic_K_half_pi() -> float:
    """K(pi/2) = 3 pi^5/32 - 9 pi^3/2 + 36 pi."""
    return 3.0 * PI**5 / 32.0 - 4.5 * PI**3 + 36.0 * PI


def taylor_k_margin(x):
    """-x^3 K(x)/36 - k(x) on (0, pi/2), i.e. the gain from sin x > x - x^3/6.

    Equals (pi^2 - pi x + x^2)(sin^2 x - (x - x^3/6)^2).
    """
    arr, scalar = _open_interval(x, 0.5 * PI, "taylor_k_margin")
    q = PI2 - PI * arr + arr * arr
    cubic = arr - arr**3 / 6.0
    s = np.sin(arr)
    # sin x - x + x^3/6, by series where it cancels
    rem = np.where(arr < 0.5, _sin_tail5(arr), s - cubic)
    return _out(q * rem * (s + cubic), scalar)


def _sin_tail5(x):
    x2 = x * x
    acc = np.zeros_like(x)
    for c in reversed([1 / 120, -1 / 5040, 1 / 362880, -1 / 39916800, 1 / 6227020800, -1 / 1307674368000]):
        acc = acc * x2 + c
    return acc * x2 * x2 * x


def _pair(pq):
    return ParamPair.coerce(pq)


def gen_redheffer_margin(pq, x, check_hypotheses=True):
    """sin_{p,q}(x)/x - (P^2 - x^2)/(P^2 + x^2), P = pi_{p,q}, for p, q >= 2.

    ``check_hypotheses=False`` allows exploring other (p, q).
    """
    pq = _pair(pq)
    if check_hypotheses and (pq.p < 2.0 or pq.q < 2.0):
        raise DomainError(f"gen_redheffer_margin needs p, q >= 2, got p={pq.p}, q={pq.q}")
    P = pq.pi
    arr, scalar = _open_interval(x, P, "gen_redheffer_margin")
    out = np.empty_like(np.atleast_1d(arr))
    flat = np.atleast_1d(arr)
    head = flat <= 0.5 * P
    if head.any():
        xs = flat[head]
        out[head] = -sin_deficit_ratio(pq, xs) - _rational_m1(xs, P)
    if (~head).any():
        xs = flat[~head]
        out[~head] = sin_pq(pq, xs) / xs - _rational(xs, P)
    return _out(out.reshape(arr.shape), scalar)


def _check_cos_hypotheses(pq: ParamPair):
    q_conj = pq.q_conj
    if pq.q < 2.0 or pq.p < q_conj * (1.0 - 1e-12):
        raise DomainError(f"cos_redheffer_margin needs q >= 2 and p >= q* = {q_conj:.17g}, got p={pq.p}, q={pq.q}")


def cos_power_minus_one(pq, x):
    """cos_{p,q}^{p-1}(x) - 1 near zero, via expm1/log1p of 1 - sin^q."""
    pq = _pair(pq)
    s = np.asarray(sin_pq(pq, x))
    return np.expm1((pq.p - 1.0) / pq.p * np.log1p(-np.abs(s) ** pq.q))


def cos_redheffer_margin(pq, x, check_hypotheses=True):
    """cos_{p,q}^{p-1}(x/2) - (P^2 - x^2)/(P^2 + x^2) for p >= q*, q >= 2."""
    pq = _pair(pq)
    if check_hypotheses:
        _check_cos_hypotheses(pq)
    P = pq.pi
    arr, scalar = _open_interval(x, P, "cos_redheffer_margin")
    flat = np.atleast_1d(arr)
    s, c = sincos_pq(pq, 0.5 * flat)
    s, c = np.atleast_1d(s), np.atleast_1d(c)
    head = s**pq.q <= 0.5
    out = np.empty_like(flat)
    out[head] = np.expm1((pq.p - 1.0) / pq.p * np.log1p(-s[head] ** pq.q)) - _rational_m1(flat[head], P)
    out[~head] = c[~head] ** (pq.p - 1.0) - _rational(flat[~head], P)
    return _out(out.reshape(arr.shape), scalar)


def multiple_angle_factor(q: float) -> float:
    return 2.0 ** (2.0 / q - 1.0)


def multiple_angle_residual(q: float, x):
    """sin_{2,q}(c x)/(c x) - 2 sin_{q*,q}(x/2) cos_{q*,q}^{q*-1}(x/2)/x, c = 2^{2/q-1}.

    Vanishes identically on (0, pi_{q*,q}) for q >= 2.
    """
    if not q >= 2.0:
        raise DomainError(f"multiple_angle_residual needs q >= 2, got {q!r}")
    q_conj = ParamPair.conjugate(q)
    pair = ParamPair(q_conj, q)
    arr, scalar = _open_interval(x, pair.pi, "multiple_angle_residual")
    c = multiple_angle_factor(q)
    lhs = np.asarray(sin_pq((2.0, q), c * arr)) / (c * arr)
    s, co = sincos_pq(pair, 0.5 * arr)
    rhs = 2.0 * np.asarray(s) * np.asarray(co) ** (q_conj - 1.0) / arr
    return _out(lhs - rhs, scalar)


def multiple_angle_pi_residual(q: float) -> float:
    """pi_{q*,q} - pi_{2,q} / 2^{2/q-1}."""
    if not q >= 2.0:
        raise DomainError(f"multiple_angle_pi_residual needs q >= 2, got {q!r}")
    return ParamPair(ParamPair.conjugate(q), q).pi - ParamPair(2.0, q).pi / multiple_angle_factor(q)
