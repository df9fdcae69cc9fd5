"""Auxiliary functions behind the cosine Redheffer inequality.

With S(x) = x cos_{p,q}^{p-1}(x/2) on [0, pi_{p,q}], the structural
condition S'^2 - S'' S >= 1 is reduced to the sign of the polynomial-like
function g on [0, 1]; h = t^{1-p} g' controls the monotonicity of g.
"""

from __future__ import annotations

import numpy as np

from ..special import DomainError, ParamPair, sincos_pq


def _pair(pq):
    return ParamPair.coerce(pq)


def _unit_interval(t, lo_open=False):
    arr = np.asarray(t, dtype=float)
    ok = (arr > 0.0) if lo_open else (arr >= 0.0)
    if np.any(~ok) or np.any(~(arr <= 1.0)):
        raise DomainError("t must lie in " + ("(0, 1]" if lo_open else "[0, 1]"))
    return arr


def _ret(out):
    return float(out) if np.ndim(out) == 0 else out


def proof_aux_g(pq, t):
    """g(t) = (p-q) t^{2p} + p^2/((p-1)q) t^{2p-2} + (2q-p-pq) t^p + (p-1)q - p^2/((p-1)q)."""
    pq = _pair(pq)
    p, q = pq.p, pq.q
    t = _unit_interval(t)
    c = p * p / ((p - 1.0) * q)
    out = (p - q) * t ** (2 * p) + c * t ** (2 * p - 2) + (2 * q - p - p * q) * t**p + (p - 1.0) * q - c
    return _ret(out)


def proof_aux_g_prime(pq, t):
    """g'(t) = 2p(p-q) t^{2p-1} + (2p^2/q) t^{2p-3} + p(2q-p-pq) t^{p-1}."""
    pq = _pair(pq)
    p, q = pq.p, pq.q
    t = _unit_interval(t, lo_open=True)
    out = 2 * p * (p - q) * t ** (2 * p - 1) + 2 * p * p / q * t ** (2 * p - 3) + p * (2 * q - p - p * q) * t ** (p - 1)
    return _ret(out)


def proof_aux_h(pq, t):
    """h(t) = t^{1-p} g'(t) = 2p(p-q) t^p + (2p^2/q) t^{p-2} + p(2q-p-pq).

    For p < 2 the middle term has a pole at t = 0, which is rejected.
    """
    pq = _pair(pq)
    p, q = pq.p, pq.q
    arr = np.asarray(t, dtype=float)
    if p < 2.0:
        t = _unit_interval(arr, lo_open=True)
    else:
        t = _unit_interval(arr)
    out = 2 * p * (p - q) * t**p + 2 * p * p / q * t ** (p - 2) + p * (2 * q - p - p * q)
    return _ret(out)


def proof_aux_h_regular(pq, t):
    """h without its t^{p-2} term; at t = 0 this is p(2q - p - pq)."""
    pq = _pair(pq)
    p, q = pq.p, pq.q
    t = _unit_interval(t)
    return _ret(2 * p * (p - q) * t**p + p * (2 * q - p - p * q))


def proof_aux_h_at_one(pq) -> float:
    """Closed form h(1) = -(p^2/q)(q+1)(q-2)."""
    pq = _pair(pq)
    return -(pq.p**2 / pq.q) * (pq.q + 1.0) * (pq.q - 2.0)


def proof_aux_g_at_zero(pq) -> float:
    """g(0) = (p-1)q - p^2/((p-1)q) = (p* + q)(p/q* - 1)."""
    pq = _pair(pq)
    return (pq.p_conj + pq.q) * (pq.p / pq.q_conj - 1.0)


def cos_redheffer_S(pq):
    """S(x) = x cos_{p,q}^{p-1}(x/2), the test function with half-period pi_{p,q}."""
    pq = _pair(pq)

    def S(x):
        x = np.asarray(x, dtype=float)
        _, c = sincos_pq(pq, 0.5 * x)
        c = np.asarray(c)
        return _ret(x * np.sign(c) * np.abs(c) ** (pq.p - 1.0))

    return S


def cos_redheffer_S_derivatives(pq, x):
    """Closed-form S'(x) and S''(x) on [0, pi_{p,q})."""
    pq = _pair(pq)
    p, q = pq.p, pq.q
    x = np.asarray(x, dtype=float)
    s, c = sincos_pq(pq, 0.5 * x)
    s, c = np.asarray(s), np.asarray(c)
    k = (p - 1.0) * q / p
    d1 = c ** (p - 1.0) - 0.5 * k * x * s ** (q - 1.0)
    d2 = -k * s ** (q - 1.0) - 0.25 * k * (q - 1.0) * x * s ** (q - 2.0) * c
    return _ret(d1), _ret(d2)


def proof_aux_f(pq, x):
    """f(x) = S'(x)^2 - S''(x) S(x) - 1, written in sin and cos of x/2."""
    pq = _pair(pq)
    p, q = pq.p, pq.q
    x = np.asarray(x, dtype=float)
    if np.any(~(x >= 0.0)) or np.any(~(x < pq.pi)):
        raise DomainError("proof_aux_f needs x in [0, pi_pq)")
    s, c = sincos_pq(pq, 0.5 * x)
    s, c = np.asarray(s), np.asarray(c)
    k = (p - 1.0) * q / p
    out = c ** (2 * p - 2) + 0.25 * k * x * x * s ** (q - 2.0) * (k * s**q + (q - 1.0) * c**p) - 1.0
    return _ret(out)


def proof_aux_f_lower(pq, x):
    """((p-1)q/p^2) g(cos_{p,q}(x/2)), the lower bound for f."""
    pq = _pair(pq)
    x = np.asarray(x, dtype=float)
    _, c = sincos_pq(pq, 0.5 * x)
    return _ret((pq.p - 1.0) * pq.q / pq.p**2 * np.asarray(proof_aux_g(pq, np.clip(c, 0.0, 1.0))))
