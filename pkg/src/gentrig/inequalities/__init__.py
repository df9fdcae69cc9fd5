"""Margin functions, grid certification and the certified inequality suite."""

from .certify import CertificationError, GridSpec, InequalityReport, certify
from .margins import (
    ZHU_SUN_ALPHA,
    ZHU_SUN_BETA,
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
from .proof import (
    cos_redheffer_S,
    proof_aux_f,
    proof_aux_g,
    proof_aux_h,
)
from .sconditions import SConditionReport, s_condition_check
from .suite import SUITES, SuiteOptions, run_suite
