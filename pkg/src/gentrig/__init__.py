"""Generalized trigonometric functions, the first p-Laplacian eigenvalue,
and numerical certification of Redheffer-type inequalities."""

from .special import (
    ConvergenceError,
    DomainError,
    ParamPair,
    TrigQuadrant,
    argument_reduce,
    beta,
    cos_pq,
    incomplete_F,
    pi_p,
    pi_pq,
    sin_pq,
    sincos_pq,
)
from .eigen import (
    EigenBounds,
    EigenResult,
    eigenfunction_first,
    eigenpair_k,
    lambda_bounds,
    lambda_first,
    lambda_shooting,
)

__version__ = "0.1.0"
