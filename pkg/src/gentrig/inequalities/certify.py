"""Grid certification of margin functions.

A margin is "greater side minus lesser side" of an inequality, so the
inequality holds on a domain exactly when the margin is positive there.
Certification samples the margin, refines around the worst sample and
reports the minimum. It is numerical evidence, not a proof.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

import numpy as np


class CertificationError(RuntimeError):
    """The margin function could not be evaluated at some sample."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    n: int = 10_000
    endpoint_offset: float = 1e-9
    refine_levels: int = 6
    spacing: str = "linear"

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 2:
            raise ValueError(f"grid needs n >= 2 samples, got {self.n!r}")
        if not (self.endpoint_offset >= 0) or not isinstance(self.refine_levels, (int, np.integer)) or self.refine_levels < 0:
            raise ValueError("endpoint_offset and refine_levels must be non-negative")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"unknown spacing {self.spacing!r}")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("grid bounds must be finite")
        if not self.lo + self.endpoint_offset < self.hi - self.endpoint_offset:
            raise ValueError(f"empty grid: [{self.lo}+{self.endpoint_offset}, {self.hi}-{self.endpoint_offset}]")
        if self.spacing == "log" and not self.lo + self.endpoint_offset > 0:
            raise ValueError("log spacing needs a positive lower end")

    @property
    def start(self) -> float:
        return self.lo + self.endpoint_offset

    @property
    def stop(self) -> float:
        return self.hi - self.endpoint_offset

    def samples(self) -> np.ndarray:
        if self.spacing == "log":
            xs = np.geomspace(self.start, self.stop, self.n)
        else:
            xs = np.linspace(self.start, self.stop, self.n)
        # pin the ends against rounding in linspace/geomspace
        xs[0], xs[-1] = self.start, self.stop
        return xs

    def interior(self) -> np.ndarray:
        return self.samples()[1:-1]


@dataclass
class InequalityReport:
    """Outcome of certifying one inequality.

    ``holds`` is ``worst_margin > -slack``; slack is zero except for
    non-strict claims with known equality cases, where it absorbs rounding.
    """

    name: str
    grid: GridSpec
    worst_margin: float
    worst_x: float
    holds: bool
    params: Optional[Dict[str, float]] = None
    slack: float = 0.0
    expected: Optional[bool] = None
    note: str = ""

    @property
    def as_expected(self) -> bool:
        return self.expected is None or self.holds == self.expected

    def to_record(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(self.params) if self.params else {},
            "n": self.grid.n,
            "lo": self.grid.lo,
            "hi": self.grid.hi,
            "endpoint_offset": self.grid.endpoint_offset,
            "refine_levels": self.grid.refine_levels,
            "worst_x": self.worst_x,
            "worst_margin": self.worst_margin,
            "slack": self.slack,
            "holds": self.holds,
            "expected": self.expected,
            "status": "ok" if self.as_expected else "UNEXPECTED",
            "note": self.note,
        }

    def to_line(self) -> str:
        params = ",".join(f"{k}={v:.17g}" for k, v in (self.params or {}).items()) or "-"
        verdict = "holds" if self.holds else "violated"
        expected = {None: "explore", True: "expect-holds", False: "expect-violated"}[self.expected]
        status = "ok" if self.as_expected else "UNEXPECTED"
        return (
            f"{self.name}\t{params}\tn={self.grid.n}\tworst_x={self.worst_x:.17g}"
            f"\tworst_margin={self.worst_margin:.17g}\t{verdict}\t{expected}\t{status}"
        )

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)


def _evaluate(margin_fn, xs):
    try:
        values = np.asarray(margin_fn(xs), dtype=float)
    except Exception as exc:
        # locate the offending sample
        for x in np.atleast_1d(xs):
            try:
                margin_fn(np.array([x]))
            except Exception as inner:
                raise CertificationError(f"margin evaluation failed at x={x!r}: {inner}", x=float(x)) from inner
        raise CertificationError(f"margin evaluation failed: {exc}") from exc
    values = np.broadcast_to(values, np.shape(xs))
    bad = ~np.isfinite(values)
    if bad.any():
        x = float(np.atleast_1d(xs)[np.argmax(np.atleast_1d(bad))])
        raise CertificationError(f"margin is not finite at x={x!r}", x=x)
    return values


def certify(
    name: str,
    margin_fn: Callable[[np.ndarray], np.ndarray],
    grid: GridSpec,
    params: Optional[Dict[str, float]] = None,
    slack: float = 0.0,
    expected: Optional[bool] = None,
) -> InequalityReport:
    """Sample ``margin_fn`` on ``grid`` and report its refined minimum.

    ``margin_fn`` must accept a 1-d array. After the grid pass the worst
    sample is refined ``grid.refine_levels`` times by halving the spacing
    towards both neighbours. Ties go to the smallest x.
    """
    xs = grid.samples()
    values = _evaluate(margin_fn, xs)
    i = int(np.argmin(values))
    best_x, best_m = float(xs[i]), float(values[i])
    left = float(xs[i - 1]) if i > 0 else best_x
    right = float(xs[i + 1]) if i < len(xs) - 1 else best_x
    for _ in range(grid.refine_levels):
        ml, mr = 0.5 * (left + best_x), 0.5 * (best_x + right)
        cand = np.array([ml, best_x, mr])
        vals = _evaluate(margin_fn, cand)
        j = int(np.argmin(vals))
        if j == 0:
            right, best_x = best_x, ml
        elif j == 1:
            left, right = ml, mr
        else:
            left, best_x = best_x, mr
        best_m = float(vals[j])
    return InequalityReport(
        name=name,
        grid=grid,
        worst_margin=best_m,
        worst_x=best_x,
        holds=bool(best_m > -slack),
        params=params,
        slack=slack,
        expected=expected,
    )
