"""Generalized trigonometric functions sin_{p,q}, cos_{p,q} and generalized pi.

sin_{p,q} is the inverse of

    F_{p,q}(x) = int_0^x (1 - t^q)^(-1/p) dt,    0 <= x <= 1,

extended to the real line as an odd function that is antiperiodic with
half-period pi_{p,q} = 2 F_{p,q}(1). cos_{p,q} is its derivative and
satisfies |cos_{p,q} x|^p + |sin_{p,q} x|^q = 1.

All public functions accept scalars or numpy arrays and return the same kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

import numpy as np
from scipy import special as _sp

ArrayLike = Union[float, np.ndarray]

#: Exponents above this make the beta function underflow.
EXPONENT_CAP = 1e6

_EPS = np.finfo(float).eps


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(RuntimeError):
    """A safeguarded iteration did not converge."""


@dataclass(frozen=True)
class ParamPair:
    """The exponent pair (p, q), both in (1, EXPONENT_CAP]."""

    p: float
    q: float

    def __post_init__(self):
        for name in ("p", "q"):
            value = getattr(self, name)
            if not isinstance(value, (int, float, np.floating, np.integer)):
                raise DomainError(f"{name} must be a real number, got {value!r}")
            value = float(value)
            if not math.isfinite(value) or value <= 1.0:
                raise DomainError(f"{name} must satisfy {name} > 1, got {value!r}")
            if value > EXPONENT_CAP:
                raise DomainError(f"{name} must satisfy {name} <= {EXPONENT_CAP:g}, got {value!r}")
            object.__setattr__(self, name, value)

    @staticmethod
    def conjugate(r: float) -> float:
        """Conjugate exponent r/(r-1), so that 1/r + 1/r* = 1."""
        if r <= 1.0:
            raise DomainError(f"conjugate exponent needs r > 1, got {r!r}")
        return r / (r - 1.0)

    @property
    def p_conj(self) -> float:
        return self.conjugate(self.p)

    @property
    def q_conj(self) -> float:
        return self.conjugate(self.q)

    @cached_property
    def pi(self) -> float:
        return pi_pq(self)

    @classmethod
    def coerce(cls, pq) -> "ParamPair":
        if isinstance(pq, cls):
            return pq
        try:
            p, q = pq
        except (TypeError, ValueError):
            raise DomainError(f"expected a (p, q) pair, got {pq!r}") from None
        return cls(p, q)


class TrigQuadrant(NamedTuple):
    reduced_x: float
    sin_sign: int
    cos_sign: int


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _unwrap(arr, scalar):
    return float(arr) if scalar else arr


def beta(a: float, b: float) -> float:
    """Euler beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"beta needs a > 0 and b > 0, got a={a!r}, b={b!r}")
    return float(_sp.beta(a, b))


def log_beta(a: float, b: float) -> float:
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"log_beta needs a > 0 and b > 0, got a={a!r}, b={b!r}")
    return float(_sp.betaln(a, b))


def pi_pq(pq) -> float:
    """Generalized pi: 2 F_{p,q}(1) = (2/q) B(1 - 1/p, 1/q)."""
    pq = ParamPair.coerce(pq)
    return 2.0 / pq.q * beta(1.0 - 1.0 / pq.p, 1.0 / pq.q)


def pi_p(p: float) -> float:
    """pi_{p,p} in its closed form 2 pi / (p sin(pi/p))."""
    if not p > 1:
        raise DomainError(f"p must satisfy p > 1, got {p!r}")
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


def sinc_m1(x: ArrayLike) -> ArrayLike:
    """sin(x)/x - 1 without cancellation near zero."""
    arr, scalar = _as_array(x)
    out = np.empty_like(arr)
    small = np.abs(arr) < 0.25
    y = arr[small] ** 2
    # Taylor series of sin(x)/x - 1 in x^2, truncated at x^14
    coeffs = [-1 / 6, 1 / 120, -1 / 5040, 1 / 362880, -1 / 39916800, 1 / 6227020800, -1 / 1307674368000]
    acc = np.zeros_like(y)
    for c in reversed(coeffs):
        acc = acc * y + c
    out[small] = acc * y
    big = ~small
    out[big] = np.sin(arr[big]) / arr[big] - 1.0
    return _unwrap(out, scalar)


# --- the integral F and its inverse -----------------------------------------


def _F_lower(pq: ParamPair, y):
    """F(y) through the lower incomplete beta; accurate while y^q <= 1/2."""
    half = 0.5 * pq.pi
    return half * _sp.betainc(1.0 / pq.q, 1.0 - 1.0 / pq.p, y ** pq.q)


def _F_deficit_series(pq: ParamPair, y, terms: int = 40):
    """F(y) - y = sum_k (1/p)_k / k! * y^(qk+1) / (qk+1), for y^q <= 1/4."""
    u = y ** pq.q
    coef = 1.0
    upow = np.ones_like(y)
    acc = np.zeros_like(y)
    a = 1.0 / pq.p
    for k in range(1, terms + 1):
        coef *= (a + k - 1) / k
        upow = upow * u
        acc = acc + coef * upow / (pq.q * k + 1.0)
    return acc * y


def incomplete_F(pq, x: ArrayLike) -> ArrayLike:
    """F_{p,q}(x) on [0, 1] via the substitution u = t^q (incomplete beta).

    Above x^q = 1/2 the complementary integral is used, so F stays accurate
    as x approaches the singular endpoint; F(1) is exactly pi_{p,q}/2.
    """
    pq = ParamPair.coerce(pq)
    arr, scalar = _as_array(x)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("incomplete_F needs x in [0, 1]")
    half = 0.5 * pq.pi
    a, b = 1.0 / pq.q, 1.0 - 1.0 / pq.p
    out = np.empty_like(arr)
    u = arr ** pq.q
    low = u <= 0.5
    out[low] = half * _sp.betainc(a, b, u[low])
    hi = arr[~low]
    with np.errstate(divide="ignore"):
        w = -np.expm1(pq.q * np.log(hi))
    out[~low] = half - half * _sp.betainc(b, a, w)
    return _unwrap(out, scalar)


def _newton_bracketed(f, fprime, target, lo, hi, x0, rtol=1e-15, maxiter=100):
    """Vectorized Newton iteration for increasing f on [lo, hi].

    Steps leaving the current bracket are replaced by bisection.
    """
    x = np.array(x0, dtype=float)
    lo = np.array(lo, dtype=float) * np.ones_like(x)
    hi = np.array(hi, dtype=float) * np.ones_like(x)
    done = np.zeros(x.shape, dtype=bool)
    for _ in range(maxiter):
        act = ~done
        if not act.any():
            return x
        xa = x[act]
        r = f(xa) - target[act]
        lo[act] = np.where(r < 0, xa, lo[act])
        hi[act] = np.where(r > 0, xa, hi[act])
        conv = np.abs(r) <= rtol * np.abs(target[act])
        with np.errstate(divide="ignore", invalid="ignore"):
            step = r / fprime(xa)
        xn = xa - step
        bad = ~((xn > lo[act]) & (xn < hi[act]))
        xn = np.where(bad, 0.5 * (lo[act] + hi[act]), xn)
        tiny = np.abs(xn - xa) <= 4 * _EPS * np.abs(xa)
        collapsed = (hi[act] - lo[act]) <= 4 * _EPS * np.abs(hi[act])
        x[act] = np.where(conv, xa, xn)
        done[act] = conv | tiny | collapsed
    if not done.all():
        raise ConvergenceError(f"Newton inversion failed to converge in {maxiter} iterations")
    return x


def _split_point(pq: ParamPair):
    y_split = 0.5 ** (1.0 / pq.q)
    return y_split, float(_F_lower(pq, np.array(y_split)))


def _sincos_reduced(pq: ParamPair, r):
    """sin and cos on the fundamental quarter [0, pi_{p,q}/2], vectorized."""
    half = 0.5 * pq.pi
    p, q = pq.p, pq.q
    y_split, t_split = _split_point(pq)
    s = np.empty_like(r)
    c = np.empty_like(r)

    low = r <= t_split
    if low.any():
        t = r[low]
        # F(y) = y (1 + y^q/(p(q+1)) + ...), so y = t once t^q is below rounding
        trivial = t**q < _EPS
        y = t.copy()
        if not trivial.all():
            tn = t[~trivial]
            y[~trivial] = _newton_bracketed(
                lambda y: _F_lower(pq, y),
                lambda y: (1.0 - y**q) ** (-1.0 / p),
                tn, 0.0, y_split, np.clip(tn, 0.0, y_split),
            )
        s[low] = y
        c[low] = np.exp(np.log1p(-(y**q)) / p)

    high = ~low
    if high.any():
        # distance to the quarter period, solved for z = (cos^p)^((p-1)/p)
        d = half - r[high]
        gain = p / (q * (p - 1.0))
        z_split = 0.5 ** ((p - 1.0) / p)
        a, b = 1.0 - 1.0 / p, 1.0 / q

        def G(z):
            return half * _sp.betainc(a, b, z ** (p / (p - 1.0)))

        def dG(z):
            w = z ** (p / (p - 1.0))
            return gain * (1.0 - w) ** (1.0 / q - 1.0)

        # near the quarter period G(z) = gain z (1 + O(z^(p/(p-1))))
        z = d / gain
        trivial = z ** (p / (p - 1.0)) < _EPS
        if not trivial.all():
            dn = d[~trivial]
            z[~trivial] = _newton_bracketed(G, dG, dn, 0.0, z_split, np.clip(dn / gain, 0.0, z_split))
        w = z ** (p / (p - 1.0))
        c[high] = z ** (1.0 / (p - 1.0))
        s[high] = np.exp(np.log1p(-w) / q)
    return s, c


def _two_prod(a, b):
    """Dekker product: a*b == hi + lo exactly."""
    split = 134217729.0  # 2^27 + 1
    hi = a * b
    ta = split * a
    a_hi = ta - (ta - a)
    a_lo = a - a_hi
    tb = split * b
    b_hi = tb - (tb - b)
    b_lo = b - b_hi
    lo = ((a_hi * b_hi - hi) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return hi, lo


def _reduce(pq: ParamPair, x):
    P = pq.pi
    period = 2.0 * P
    n = np.rint(x / period)
    hi, lo = _two_prod(n, period)
    r = (x - hi) - lo
    sin_sign = np.where(r < 0, -1, 1)
    r = np.abs(r)
    # rounding can leave |r| a hair above P
    r = np.minimum(r, P)
    upper = r > 0.5 * P
    cos_sign = np.where(upper, -1, 1)
    reduced = np.where(upper, P - r, r)
    return reduced, sin_sign, cos_sign


def argument_reduce(pq, x: float) -> TrigQuadrant:
    """Map x to [0, pi_{p,q}/2] and the signs of sin and cos at x."""
    pq = ParamPair.coerce(pq)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    reduced, ss, cs = _reduce(pq, np.asarray(float(x)))
    return TrigQuadrant(float(reduced), int(ss), int(cs))


def sincos_pq(pq, x: ArrayLike):
    """Return (sin_{p,q} x, cos_{p,q} x) evaluated together."""
    pq = ParamPair.coerce(pq)
    arr, scalar = _as_array(x)
    if np.any(~np.isfinite(arr)):
        raise DomainError("sin_pq/cos_pq need finite arguments")
    flat = arr.reshape(-1)
    reduced, ss, cs = _reduce(pq, flat)
    s, c = _sincos_reduced(pq, reduced)
    s = (ss * s).reshape(arr.shape)
    c = (cs * c).reshape(arr.shape)
    return _unwrap(s, scalar), _unwrap(c, scalar)


def sin_pq(pq, x: ArrayLike) -> ArrayLike:
    """Generalized sine, the inverse of F_{p,q} extended oddly and antiperiodically."""
    return sincos_pq(pq, x)[0]


def cos_pq(pq, x: ArrayLike) -> ArrayLike:
    """Generalized cosine, the derivative of sin_pq."""
    return sincos_pq(pq, x)[1]


def sin_deficit_ratio(pq, x: ArrayLike) -> ArrayLike:
    """1 - sin_{p,q}(x)/x for x in (0, pi_{p,q}/2], free of cancellation near 0.

    Uses x - sin_{p,q}(x) = F(y) - y with y = sin_{p,q}(x), summed as a series
    when y is small.
    """
    pq = ParamPair.coerce(pq)
    arr, scalar = _as_array(x)
    if np.any(~(arr > 0)) or np.any(arr > 0.5 * pq.pi):
        raise DomainError("sin_deficit_ratio needs x in (0, pi_pq/2]")
    y = np.asarray(sin_pq(pq, arr), dtype=float)
    out = np.empty_like(arr)
    small = y**pq.q <= 0.25
    out[small] = _F_deficit_series(pq, y[small]) / arr[small]
    out[~small] = 1.0 - y[~small] / arr[~small]
    return _unwrap(out, scalar)
