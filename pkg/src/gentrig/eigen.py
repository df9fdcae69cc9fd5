"""First eigenvalue of the one-dimensional p-Laplacian with Dirichlet data.

    -(|u'|^{p-2} u')' = lambda |u|^{p-2} u,   u(-1) = u(1) = 0

The closed form lambda(p) = (p-1) (pi_p/2)^p is paired with an independent
shooting-method solver used as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .special import DomainError, ParamPair, sin_pq, sinc_m1

PI2_6 = math.pi**2 / 6.0


class ShootingError(RuntimeError):
    """The shooting bracket does not straddle the eigenvalue."""


@dataclass(frozen=True)
class EigenResult:
    lambda_: float
    k: int = 1
    interval: Tuple[float, float] = (-1.0, 1.0)
    method: str = "closed_form"
    residual: float = 0.0
    tol: float = 0.0


@dataclass(frozen=True)
class EigenBounds:
    lower_linear: float
    upper_linear: float
    lower_refined: float
    upper_refined: float

    @property
    def lower(self) -> float:
        """The sharper of the two lower bounds."""
        return max(self.lower_linear, self.lower_refined)


def _check_p(p):
    if not isinstance(p, (int, float, np.floating, np.integer)) or not math.isfinite(p) or p <= 1:
        raise DomainError(f"p must be a finite real with p > 1, got {p!r}")
    return float(p)


def log_half_pi_p(p: float) -> float:
    """log(pi_p / 2) = -log(sin(pi/p) / (pi/p)), accurate for large p."""
    p = _check_p(p)
    return -math.log1p(sinc_m1(math.pi / p))


def lambda_first(p: float) -> float:
    """Closed-form first eigenvalue (p-1) (pi/(p sin(pi/p)))^p on [-1, 1]."""
    p = _check_p(p)
    return (p - 1.0) * math.exp(p * log_half_pi_p(p))


def lambda_first_excess(p: float) -> float:
    """lambda(p) - p without the rounding of lambda(p) itself.

    lambda - p = (p-1) expm1(p L) - 1 with L = log(pi_p/2).
    """
    p = _check_p(p)
    return (p - 1.0) * math.expm1(p * log_half_pi_p(p)) - 1.0


def lambda_first_derivative(p: float) -> float:
    """d lambda / dp from the closed form."""
    p = _check_p(p)
    x = math.pi / p
    dlog = 1.0 / (p - 1.0) + log_half_pi_p(p) - 1.0 + x / math.tan(x)
    return lambda_first(p) * dlog


def eigenfunction_first(p: float, x):
    """phi(x) = sin_p(pi_p (x + 1) / 2) on [-1, 1], normalized so max phi = 1."""
    p = _check_p(p)
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr >= -1.0)) or np.any(~(arr <= 1.0)):
        raise DomainError("eigenfunction_first needs x in [-1, 1]")
    return _phi(ParamPair(p, p), x)


def _phi(pp: ParamPair, x):
    return sin_pq(pp, 0.5 * pp.pi * (np.asarray(x, dtype=float) + 1.0))


def eigenpair_k(p: float, a: float, b: float, k: int, amplitude: float = 1.0):
    """k-th Dirichlet eigenpair on [a, b].

    Returns lambda_k = (2k/(b-a))^p lambda(p) and
    u_k(x) = amplitude * phi(2k(x-a)/(b-a) - 1).
    """
    p = _check_p(p)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    pp = ParamPair(p, p)
    length = b - a
    lam = math.exp(p * math.log(2.0 * k / length)) * lambda_first(p)

    def u_k(x):
        return amplitude * _phi(pp, 2.0 * k * (np.asarray(x, dtype=float) - a) / length - 1.0)

    return lam, u_k


def lambda_bounds(p: float) -> EigenBounds:
    """Linear bounds p <= lambda <= p+1 and the refined pair

    p + pi^2/6 - 1 - pi^2/(6(p+1)) < lambda < p + pi^2/6 - 1.
    """
    p = _check_p(p)
    upper_refined = p + PI2_6 - 1.0
    return EigenBounds(
        lower_linear=p,
        upper_linear=p + 1.0,
        lower_refined=upper_refined - PI2_6 / (p + 1.0),
        upper_refined=upper_refined,
    )


def _shoot(p: float, lam: float, steps: int) -> float:
    # u' = |v|^(1/(p-1)) sgn v,  v' = -lam |u|^(p-2) u,  u(-1) = 0, v(-1) = 1
    e = 1.0 / (p - 1.0)
    pm1 = p - 1.0
    h = 2.0 / steps
    h2 = 0.5 * h
    h6 = h / 6.0
    u, v = 0.0, 1.0

    def du(v):
        return v**e if v >= 0.0 else -((-v) ** e)

    def dv(u):
        return -lam * u**pm1 if u >= 0.0 else lam * (-u) ** pm1

    for _ in range(steps):
        k1u, k1v = du(v), dv(u)
        k2u, k2v = du(v + h2 * k1v), dv(u + h2 * k1u)
        k3u, k3v = du(v + h2 * k2v), dv(u + h2 * k2u)
        k4u, k4v = du(v + h * k3v), dv(u + h * k3u)
        u += h6 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        v += h6 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    return u


def default_steps(p: float) -> int:
    # the layer around the maximum narrows like 1/p
    return max(10_000, int(50 * p))


def lambda_shooting(p: float, tol: float = 1e-8, steps: Optional[int] = None) -> EigenResult:
    """First eigenvalue by shooting from x = -1 with RK4 and bisecting on u(1).

    The bracket [p, p+1] comes from the linear bounds only, so this solver
    can be used to test the refined ones.
    """
    p = _check_p(p)
    if steps is None:
        steps = default_steps(p)
    if not (tol > 0 and math.isfinite(tol)):
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not isinstance(steps, (int, np.integer)) or steps < 10_000:
        raise DomainError(f"steps must be an integer >= 10000, got {steps!r}")
    lo, hi = p, p + 1.0
    u_lo, u_hi = _shoot(p, lo, steps), _shoot(p, hi, steps)
    if not (u_lo > 0.0 > u_hi):
        raise ShootingError(
            f"u(1) has signs {math.copysign(1, u_lo):+g}/{math.copysign(1, u_hi):+g} at the bracket "
            f"[{lo}, {hi}]; integration is too inaccurate for p={p}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _shoot(p, mid, steps) > 0.0:
            lo = mid
        else:
            hi = mid
    lam = 0.5 * (lo + hi)
    return EigenResult(
        lambda_=lam, k=1, interval=(-1.0, 1.0), method="shooting", residual=abs(_shoot(p, lam, steps)), tol=tol
    )
