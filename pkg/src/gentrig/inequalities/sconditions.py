"""Checker for the structural conditions on an antiperiodic function S.

On [0, a] the conditions are

  (S1')  S(0) = S(a) = 0
  (S2)   0 < S(x) < x                on (0, a)
  (S4)   S'(x)^2 - S''(x) S(x) >= 1  on [0, a)

and when they hold, (a^2 - x^2)/(a^2 + x^2) < S(x)/x on (0, a).
Smoothness (S3) is taken on trust from the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .certify import GridSpec

MIN_INTERIOR_POINTS = 16


@dataclass
class SConditionReport:
    a: float
    s1_ok: bool
    s2_ok: bool
    s4_ok: bool
    s4_min: float
    s4_argmin: float
    tol: float
    gri_ok: Optional[bool] = None
    gri_min: Optional[float] = None
    notes: str = ""

    @property
    def all_ok(self) -> bool:
        return self.s1_ok and self.s2_ok and self.s4_ok


def s_condition_check(
    S: Callable[[np.ndarray], np.ndarray],
    a: float,
    grid: GridSpec,
    tol: float = 1e-6,
    skip: Sequence[float] = (),
) -> SConditionReport:
    """Check (S1'), (S2), (S4) for S on the grid; derivatives by central differences.

    The difference step is the grid spacing, so S is also evaluated one step
    outside each interior sample. Points listed in ``skip`` (the exceptional
    set where S'' may not exist) are excluded from the (S4) scan.
    """
    if not a > 0:
        raise ValueError(f"half-period a must be positive, got {a!r}")
    if grid.lo < 0 or grid.hi > a:
        raise ValueError(f"grid [{grid.lo}, {grid.hi}] must lie inside [0, {a}]")
    if grid.spacing != "linear":
        raise ValueError("s_condition_check needs a linear grid")
    xs = grid.samples()
    interior = xs[1:-1]
    if interior.size < MIN_INTERIOR_POINTS:
        raise ValueError(f"grid has {interior.size} interior points; at least {MIN_INTERIOR_POINTS} are required")
    notes = []

    end_vals = np.asarray(S(np.array([0.0, a])), dtype=float)
    s1_ok = bool(np.all(np.abs(end_vals) <= tol))
    if not s1_ok:
        notes.append(f"S(0)={end_vals[0]:.3g}, S(a)={end_vals[1]:.3g}")

    sv = np.asarray(S(xs), dtype=float)
    si = sv[1:-1]
    s2_ok = bool(np.all(si > 0.0) and np.all(si < interior))
    if not s2_ok:
        bad = interior[~((si > 0.0) & (si < interior))]
        notes.append(f"S2 fails at x={bad[0]:.17g}")

    h = (grid.stop - grid.start) / (grid.n - 1)
    d1 = (sv[2:] - sv[:-2]) / (2.0 * h)
    d2 = (sv[2:] - 2.0 * si + sv[:-2]) / (h * h)
    q = d1 * d1 - d2 * si
    mask = np.ones(interior.size, dtype=bool)
    for xp in skip:
        mask &= np.abs(interior - xp) > 1.5 * h
    j = int(np.argmin(np.where(mask, q, np.inf)))
    s4_min = float(q[j])
    s4_ok = bool(s4_min >= 1.0 - tol)
    if not s4_ok:
        notes.append(f"S4 minimum {s4_min:.6g} at x={interior[j]:.6g}")

    report = SConditionReport(
        a=a, s1_ok=s1_ok, s2_ok=s2_ok, s4_ok=s4_ok, s4_min=s4_min, s4_argmin=float(interior[j]), tol=tol
    )
    if report.all_ok:
        gri = si / interior - (a - interior) * (a + interior) / (a * a + interior * interior)
        report.gri_min = float(gri.min())
        report.gri_ok = bool(report.gri_min > 0.0)
        if not report.gri_ok:
            notes.append("Redheffer-type conclusion fails on the grid")
    report.notes = "; ".join(notes)
    return report
