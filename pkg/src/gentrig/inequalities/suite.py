"""The certified suite: every inequality and sign claim with its expected verdict.

Checks with ``expected=None`` are explorations outside the proven parameter
ranges; their outcome is recorded but never counts as a failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from .. import eigen
from ..special import ParamPair, pi_pq
from . import margins as M
from . import proof
from .certify import GridSpec, InequalityReport, certify
from .sconditions import SConditionReport, s_condition_check

SUITES = (
    "redheffer",
    "zhu-sun",
    "kajikiya",
    "eigen-bounds",
    "monotonicity",
    "gen-redheffer",
    "cos-redheffer",
    "multiple-angle",
    "proof-aux",
    "s-conditions",
)

GEN_REDHEFFER_VALUES = (2.0, 2.5, 3.0, 5.0)
COS_REDHEFFER_Q = (2.0, 3.0, 4.0)
COS_REDHEFFER_P = (2.0, 4.0, 10.0)
# pairs with q >= 2 and p >= q*, covering all three cases of the sign argument for g
PROOF_PAIRS = ((2.0, 2.0), (3.0, 2.0), (4.0, 2.0), (10.0, 2.0), (1.5, 3.0), (2.0, 3.0), (3.0, 3.0), (4.0 / 3.0, 4.0), (1.5, 4.0))
IDENTITY_TOL = 1e-8
DERIVATIVE_TOL = 1e-6
ROUNDING_SLACK = 1e-12
S4_TOL = 1e-6


@dataclass
class Check:
    name: str
    margin_fn: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float
    params: Optional[Dict[str, float]] = None
    expected: Optional[bool] = True
    slack: float = 0.0
    spacing: str = "linear"
    note: str = ""


@dataclass(frozen=True)
class SuiteOptions:
    n: int = 10_000
    endpoint_offset: float = 1e-9
    refine_levels: int = 6
    alpha: Optional[float] = None
    beta: Optional[float] = None
    p: Optional[float] = None
    q: Optional[float] = None


def _vec(fn):
    def wrapped(xs):
        return np.array([fn(float(x)) for x in np.atleast_1d(xs)])

    return wrapped


def _params(pq) -> Dict[str, float]:
    return {"p": pq[0], "q": pq[1]}


def _redheffer(opts):
    return [
        Check("redheffer", M.redheffer_margin, 0.0, math.pi),
        Check("redheffer-cos-half-angle", lambda x: M.cos_redheffer_margin((2.0, 2.0), x), 0.0, math.pi),
    ]


def _zhu_sun(opts):
    alpha = M.ZHU_SUN_ALPHA if opts.alpha is None else opts.alpha
    beta = M.ZHU_SUN_BETA if opts.beta is None else opts.beta
    checks = [
        Check(
            "zhu-sun-upper",
            lambda x: M.zhu_sun_margins(x, alpha, beta)[0],
            0.0,
            math.pi,
            {"alpha": alpha},
            expected=alpha <= M.ZHU_SUN_ALPHA,
        ),
        Check(
            "zhu-sun-lower",
            lambda x: M.zhu_sun_margins(x, alpha, beta)[1],
            0.0,
            math.pi,
            {"beta": beta},
            expected=beta >= M.ZHU_SUN_BETA,
        ),
    ]
    if opts.alpha is None and opts.beta is None:
        for delta in (0.01, 0.1):
            a = M.ZHU_SUN_ALPHA + delta
            checks.append(
                Check("zhu-sun-upper-sharpness", lambda x, a=a: M.zhu_sun_margins(x, a)[0], 0.0, math.pi, {"alpha": a}, expected=False)
            )
        b = 0.99
        checks.append(
            Check("zhu-sun-lower-sharpness", lambda x: M.zhu_sun_margins(x, M.ZHU_SUN_ALPHA, b)[1], 0.0, math.pi, {"beta": b}, expected=False)
        )
    return checks


def _kajikiya(opts):
    k_half = M.quintic_K_half_pi()
    return [
        Check("kajikiya-k-negative", lambda x: -np.asarray(M.k_kajikiya(x)), 0.0, math.pi),
        Check("kajikiya-k-redheffer-bound", M.k_bound_margin, 0.0, math.pi),
        Check("kajikiya-taylor-bound", M.taylor_k_margin, 0.0, 0.5 * math.pi),
        Check("kajikiya-quintic-derivative-negative", lambda x: -np.asarray(M.quintic_K_prime(x)), 0.0, 0.5 * math.pi),
        Check("kajikiya-quintic-above-endpoint", lambda x: np.asarray(M.quintic_K(x)) - k_half, 0.0, 0.5 * math.pi),
        Check("kajikiya-quintic-endpoint-positive", lambda x: np.full(np.shape(x), k_half), 0.0, 0.5 * math.pi,
              note=f"K(pi/2) = {k_half:.17g}"),
    ]


def _eigen_bounds(opts):
    excess = _vec(eigen.lambda_first_excess)
    c = eigen.PI2_6
    return [
        Check("eigen-lower-linear", excess, 1.01, 1000.0, spacing="log"),
        Check("eigen-upper-linear", lambda p: 1.0 - excess(p), 1.01, 1000.0, spacing="log"),
        Check("eigen-upper-refined", lambda p: (c - 1.0) - excess(p), 1.01, 1000.0, spacing="log"),
        Check("eigen-lower-refined", lambda p: excess(p) - (c - 1.0 - c / (np.asarray(p) + 1.0)), 1.01, 1000.0, spacing="log"),
        # below 12/pi^2 the refined lower bound falls under p, so p carries the estimate
        Check("eigen-refined-below-linear-up-to-12/pi^2",
              lambda p: c / (np.asarray(p) + 1.0) - (c - 1.0), 1.0, 12.0 / math.pi**2),
    ]


def _monotonicity(opts):
    return [Check("eigen-monotone-derivative", _vec(eigen.lambda_first_derivative), 1.001, 100.0, spacing="log")]


def _gen_redheffer(opts):
    if opts.p is not None and opts.q is not None:
        pairs = [(opts.p, opts.q)]
    else:
        pairs = [(p, q) for p in GEN_REDHEFFER_VALUES for q in GEN_REDHEFFER_VALUES]
        pairs += [(1.5, 2.0), (2.0, 1.5), (1.5, 1.5)]
    checks = []
    for pq in pairs:
        proven = pq[0] >= 2.0 and pq[1] >= 2.0
        checks.append(
            Check(
                "gen-redheffer",
                lambda x, pq=pq: M.gen_redheffer_margin(pq, x, check_hypotheses=False),
                0.0,
                pi_pq(pq),
                _params(pq),
                expected=True if proven else None,
            )
        )
    return checks


def _cos_redheffer(opts):
    if opts.p is not None and opts.q is not None:
        pairs = [(opts.p, opts.q)]
    else:
        pairs = []
        for q in COS_REDHEFFER_Q:
            q_conj = ParamPair.conjugate(q)
            pairs += [(q_conj, q)] + [(p, q) for p in COS_REDHEFFER_P if p >= q_conj and p != q_conj]
        pairs += [(1.2, 2.0), (1.3, 3.0), (3.0, 1.5)]
    checks = []
    for pq in pairs:
        proven = pq[1] >= 2.0 and pq[0] >= ParamPair.conjugate(pq[1]) * (1.0 - 1e-12)
        checks.append(
            Check(
                "cos-redheffer",
                lambda x, pq=pq: M.cos_redheffer_margin(pq, x, check_hypotheses=False),
                0.0,
                pi_pq(pq),
                _params(pq),
                expected=True if proven else None,
            )
        )
    return checks


def _multiple_angle(opts):
    checks = []
    qs = [opts.q] if opts.q is not None else list(COS_REDHEFFER_Q)
    for q in qs:
        P = ParamPair(ParamPair.conjugate(q), q).pi
        checks.append(
            Check(
                "multiple-angle-identity",
                lambda x, q=q: IDENTITY_TOL - np.abs(M.multiple_angle_residual(q, x)),
                0.0,
                P,
                {"q": q},
            )
        )
        res = M.multiple_angle_pi_residual(q)
        checks.append(
            Check(
                "multiple-angle-half-period",
                lambda x, res=res: np.full(np.shape(x), 1e-10 - abs(res)),
                0.0,
                P,
                {"q": q},
                note=f"pi_(q*,q) - pi_(2,q)/2^(2/q-1) = {res:.3g}",
            )
        )
    return checks


# away from t = 0, where g' is singular for p < 2, and from the clipped stencil at t = 1
FD_WINDOW = (0.05, 0.95)


def _fd_derivative_gap(pq, h=1e-5):
    def margin(t):
        t = np.asarray(t, dtype=float)
        fd = (np.asarray(proof.proof_aux_g(pq, t + h)) - np.asarray(proof.proof_aux_g(pq, t - h))) / (2.0 * h)
        return DERIVATIVE_TOL - np.abs(t ** (pq[0] - 1.0) * np.asarray(proof.proof_aux_h(pq, t)) - fd)

    return margin


def _proof_aux(opts):
    pairs = [(opts.p, opts.q)] if opts.p is not None and opts.q is not None else list(PROOF_PAIRS)
    checks = []
    for pq in pairs:
        proven = pq[1] >= 2.0 and pq[0] >= ParamPair.conjugate(pq[1]) * (1.0 - 1e-12)
        exp = True if proven else None
        checks += [
            Check("proof-g-nonnegative", lambda t, pq=pq: proof.proof_aux_g(pq, t), 0.0, 1.0, _params(pq),
                  expected=exp, slack=ROUNDING_SLACK),
            Check("proof-h-is-scaled-g-prime", _fd_derivative_gap(pq), *FD_WINDOW, _params(pq), expected=True),
            Check("proof-f-nonnegative", lambda x, pq=pq: proof.proof_aux_f(pq, x), 0.0, pi_pq(pq), _params(pq),
                  expected=exp, slack=ROUNDING_SLACK),
            Check("proof-f-above-g-bound",
                  lambda x, pq=pq: np.asarray(proof.proof_aux_f(pq, x)) - np.asarray(proof.proof_aux_f_lower(pq, x)),
                  0.0, pi_pq(pq), _params(pq), expected=exp, slack=ROUNDING_SLACK),
        ]
    return checks


def _s_condition_cases(opts) -> List[Tuple[str, Callable, float, Optional[Dict[str, float]], Optional[bool]]]:
    cases = [("s-conditions:sin", np.sin, math.pi, None, True)]
    pairs = [(opts.p, opts.q)] if opts.p is not None and opts.q is not None else [(3.0, 2.0), (2.0, 2.0), (1.5, 3.0), (4.0, 2.0)]
    for pq in pairs:
        proven = pq[1] >= 2.0 and pq[0] >= ParamPair.conjugate(pq[1]) * (1.0 - 1e-12)
        cases.append(("s-conditions:x*cos^(p-1)(x/2)", proof.cos_redheffer_S(pq), pi_pq(pq), _params(pq), True if proven else None))
    cases.append(("s-conditions:parabola", lambda x: np.asarray(x) * (math.pi - np.asarray(x)) / math.pi, math.pi, None, False))
    return cases


def s_report_to_inequality(name, report: SConditionReport, grid: GridSpec, params, expected) -> InequalityReport:
    """Fold an S-condition report into the common record shape.

    The margin is s4_min - (1 - tol); a failed (S1') or (S2) forces it to -inf.
    """
    margin = report.s4_min - (1.0 - report.tol)
    if not (report.s1_ok and report.s2_ok):
        margin = -math.inf
    note = f"s1={report.s1_ok} s2={report.s2_ok} s4={report.s4_ok} s4_min={report.s4_min:.12g}"
    if report.gri_ok is not None:
        note += f" gri={report.gri_ok} gri_min={report.gri_min:.6g}"
    if report.notes:
        note += f" ({report.notes})"
    return InequalityReport(
        name=name,
        grid=grid,
        worst_margin=margin,
        worst_x=report.s4_argmin,
        holds=bool(report.all_ok and (report.gri_ok is not False)),
        params=params,
        expected=expected,
        note=note,
    )


def _run_s_conditions(opts) -> List[InequalityReport]:
    out = []
    for name, S, a, params, expected in _s_condition_cases(opts):
        grid = GridSpec(0.0, a, opts.n, 0.0, 0)
        rep = s_condition_check(S, a, grid, tol=S4_TOL)
        out.append(s_report_to_inequality(name, rep, grid, params, expected))
    return out


_BUILDERS = {
    "redheffer": _redheffer,
    "zhu-sun": _zhu_sun,
    "kajikiya": _kajikiya,
    "eigen-bounds": _eigen_bounds,
    "monotonicity": _monotonicity,
    "gen-redheffer": _gen_redheffer,
    "cos-redheffer": _cos_redheffer,
    "multiple-angle": _multiple_angle,
    "proof-aux": _proof_aux,
}


def build_checks(suite: str, opts: SuiteOptions = SuiteOptions()) -> List[Check]:
    if suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or 'all'")
    return _BUILDERS[suite](opts)


def run_check(check: Check, opts: SuiteOptions) -> InequalityReport:
    grid = GridSpec(check.lo, check.hi, opts.n, opts.endpoint_offset, opts.refine_levels, check.spacing)
    report = certify(check.name, check.margin_fn, grid, check.params, check.slack, check.expected)
    report.note = check.note
    return report


def run_suite(suite: str = "all", opts: SuiteOptions = SuiteOptions()) -> List[InequalityReport]:
    """Run one named suite (or ``"all"``) and return its reports in a fixed order."""
    names: Iterable[str] = SUITES if suite == "all" else (suite,)
    reports: List[InequalityReport] = []
    for name in names:
        if name == "s-conditions":
            reports += _run_s_conditions(opts)
        elif name in _BUILDERS:
            reports += [run_check(c, opts) for c in build_checks(name, opts)]
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    return reports
