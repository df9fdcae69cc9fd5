"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O error. Output is fully determined by the arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import eigen
from .inequalities import margins as M
from .inequalities import proof
from .inequalities.certify import GridSpec
from .inequalities.sconditions import MIN_INTERIOR_POINTS
from .inequalities.suite import SUITES, SuiteOptions, run_suite
from .special import ConvergenceError, DomainError, ParamPair, cos_pq, incomplete_F, pi_pq, sin_pq

OUTPUT_DIR_ENV = "GENTRIG_OUTPUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

EVAL_FUNCTIONS = ("sin_pq", "cos_pq", "pi_pq", "F", "lambda", "bounds")
TABLE_FUNCTIONS = ("sin_pq", "cos_pq", "F", "lambda")
PLOT_DATA = ("redheffer", "zhu-sun", "gen-redheffer", "cos-redheffer", "kajikiya-k", "lambda", "proof-g")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    output: str = "human"
    output_path: Optional[str] = None


def _fmt(v: float) -> str:
    return f"{v:.15g}"


def _exact(v: float) -> str:
    return repr(float(v))


def _finite(name):
    def parse(text):
        try:
            v = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be a number, got {text!r}")
        if not math.isfinite(v):
            raise argparse.ArgumentTypeError(f"{name} must be finite, got {text!r}")
        return v

    return parse


def _p_list(text):
    try:
        values = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--p must be a comma-separated list of numbers, got {text!r}")
    if not values or not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"--p must list finite numbers, got {text!r}")
    return values


def _require(params, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# --- table rendering ---------------------------------------------------------


def _render(rows: List[Dict[str, Any]], output: str, header: Sequence[str]) -> str:
    if output == "json":
        return json.dumps(rows, sort_keys=False) + "\n"
    if output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row[h]) for h in header])
        return buf.getvalue()
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_cell(row[h], human=True) for h in header))
    return "\n".join(lines) + "\n"


def _cell(v, human=False):
    if isinstance(v, bool) or v is None:
        return str(v).lower()
    if isinstance(v, float):
        return _fmt(v) if human else _exact(v)
    if isinstance(v, dict):
        return ";".join(f"{k}={_exact(x)}" for k, x in v.items())
    return str(v)


# --- commands ------------------------------------------------------------------


def cmd_eval(cfg: RunConfig):
    prm = cfg.params
    fn = prm["function"]
    if fn == "lambda":
        _require(prm, "p")
        values = {"lambda": eigen.lambda_first(prm["p"])}
    elif fn == "bounds":
        _require(prm, "p")
        b = eigen.lambda_bounds(prm["p"])
        values = {
            "lower_linear": b.lower_linear,
            "upper_linear": b.upper_linear,
            "lower_refined": b.lower_refined,
            "upper_refined": b.upper_refined,
        }
    elif fn == "pi_pq":
        _require(prm, "p", "q")
        values = {"pi_pq": pi_pq((prm["p"], prm["q"]))}
    else:
        _require(prm, "p", "q", "x")
        pq = (prm["p"], prm["q"])
        f = {"sin_pq": sin_pq, "cos_pq": cos_pq, "F": incomplete_F}[fn]
        values = {fn: f(pq, prm["x"])}
    if cfg.output == "human":
        text = "\n".join(_fmt(v) for v in values.values()) + "\n"
    else:
        row = {k: prm.get(k) for k in ("p", "q", "x") if prm.get(k) is not None}
        row.update(values)
        text = _render([row], cfg.output, list(row))
    return text, EXIT_OK


def _grid(lo, hi, n, offset=0.0):
    if n is None or n < 1:
        raise UsageError(f"--n must be a positive integer, got {n}")
    if n == 1:
        return np.array([lo + offset])
    return GridSpec(lo, hi, n, offset, 0).samples()


def _lambda_rows(p_from, p_to, n):
    if not p_from < p_to:
        raise UsageError("--p-from must be smaller than --p-to")
    rows = []
    for p in _grid(p_from, p_to, n):
        p = float(p)
        b = eigen.lambda_bounds(p)
        rows.append({"p": p, "lambda": eigen.lambda_first(p), "lower": b.lower, "upper": b.upper_refined})
    return rows, ["p", "lambda", "lower", "upper"]


def cmd_table(cfg: RunConfig):
    prm = cfg.params
    fn = prm["function"]
    if fn == "lambda":
        _require(prm, "p_from", "p_to")
        rows, header = _lambda_rows(prm["p_from"], prm["p_to"], prm["n"])
    else:
        _require(prm, "p", "q")
        pq = ParamPair(prm["p"], prm["q"])
        # default range: [0, 1] for F, one full period for sin and cos
        lo = 0.0 if prm.get("x_from") is None else prm["x_from"]
        hi = prm.get("x_to")
        if hi is None:
            hi = 1.0 if fn == "F" else 2.0 * pq.pi
        if not lo < hi:
            raise UsageError("--x-from must be smaller than --x-to")
        xs = _grid(lo, hi, prm["n"])
        f = {"sin_pq": sin_pq, "cos_pq": cos_pq, "F": incomplete_F}[fn]
        vals = np.asarray(f(pq, xs))
        rows = [{"x": float(x), "value": float(v)} for x, v in zip(xs, vals)]
        header = ["x", "value"]
    return _render(rows, "csv" if cfg.output == "human" else cfg.output, header), EXIT_OK


def cmd_plot_data(cfg: RunConfig):
    prm = cfg.params
    name = prm["function"]
    n = prm["n"]
    offset = prm["offset"]
    if name == "lambda":
        rows, header = _lambda_rows(prm.get("p_from") or 1.01, prm.get("p_to") or 100.0, n)
        return _render(rows, "csv" if cfg.output == "human" else cfg.output, header), EXIT_OK
    if name in ("redheffer", "zhu-sun", "kajikiya-k"):
        xs = _grid(0.0, math.pi, n, offset)
        R = (math.pi - xs) * (math.pi + xs) / (math.pi**2 + xs**2)
        if name == "redheffer":
            cols = {"x": xs, "lhs": R, "rhs": np.sin(xs) / xs, "margin": M.redheffer_margin(xs)}
        elif name == "zhu-sun":
            alpha = M.ZHU_SUN_ALPHA if prm.get("alpha") is None else prm["alpha"]
            beta = M.ZHU_SUN_BETA if prm.get("beta") is None else prm["beta"]
            up, low = M.zhu_sun_margins(xs, alpha, beta)
            cols = {"x": xs, "lower": R**beta, "sinc": np.sin(xs) / xs, "upper": R**alpha, "lower_margin": low, "upper_margin": up}
        else:
            cols = {"x": xs, "k": M.k_kajikiya(xs), "k_over_x2": M.k_over_x2(xs), "bound": M.redheffer_k_bound(xs)}
    elif name in ("gen-redheffer", "cos-redheffer"):
        _require(prm, "p", "q")
        pq = ParamPair(prm["p"], prm["q"])
        P = pq.pi
        xs = _grid(0.0, P, n, offset)
        R = (P - xs) * (P + xs) / (P * P + xs * xs)
        if name == "gen-redheffer":
            cols = {"x": xs, "lhs": R, "rhs": np.asarray(sin_pq(pq, xs)) / xs, "margin": M.gen_redheffer_margin(pq, xs)}
        else:
            c = np.asarray(cos_pq(pq, 0.5 * xs))
            cols = {"x": xs, "lhs": R, "rhs": np.abs(c) ** (pq.p - 1.0), "margin": M.cos_redheffer_margin(pq, xs)}
    elif name == "proof-g":
        _require(prm, "p", "q")
        pq = ParamPair(prm["p"], prm["q"])
        ts = _grid(0.0, 1.0, n, 0.0)
        cols = {"t": ts, "g": proof.proof_aux_g(pq, ts)}
    else:
        raise UsageError(f"unknown plot-data set {name!r}")
    header = list(cols)
    arrays = [np.atleast_1d(np.asarray(v, dtype=float)) for v in cols.values()]
    rows = [dict(zip(header, map(float, vals))) for vals in zip(*arrays)]
    return _render(rows, "csv" if cfg.output == "human" else cfg.output, header), EXIT_OK


def cmd_verify(cfg: RunConfig):
    prm = cfg.params
    n = prm["n"]
    if n - 2 < MIN_INTERIOR_POINTS:
        raise UsageError(f"grid too coarse: --n {n} leaves {max(n - 2, 0)} interior points, need at least {MIN_INTERIOR_POINTS}")
    if prm["offset"] < 0 or prm["refine"] < 0:
        raise UsageError("--offset and --refine must be non-negative")
    if (prm.get("p") is None) != (prm.get("q") is None) and prm["suite"] in ("gen-redheffer", "cos-redheffer", "proof-aux", "s-conditions"):
        raise UsageError("--p and --q must be given together")
    for key in ("p", "q"):
        if prm.get(key) is not None and prm[key] <= 1:
            raise DomainError(f"{key} must satisfy {key} > 1, got {prm[key]!r}")
    opts = SuiteOptions(
        n=n, endpoint_offset=prm["offset"], refine_levels=prm["refine"],
        alpha=prm.get("alpha"), beta=prm.get("beta"), p=prm.get("p"), q=prm.get("q"),
    )
    try:
        reports = run_suite(prm["suite"], opts)
    except ValueError as exc:
        raise UsageError(str(exc))
    ok = all(r.as_expected for r in reports)
    records = [r.to_record() for r in reports]
    if cfg.output == "json":
        text = json.dumps(records) + "\n"
    elif cfg.output == "csv":
        text = _render(records, "csv", list(records[0]) if records else [])
    else:
        text = "".join(r.to_line() + ("\t# " + r.note if r.note else "") + "\n" for r in reports)
    return text, EXIT_OK if ok else EXIT_FAIL


def eigen_row(p: float, tol: float, shoot_tol: float) -> Dict[str, Any]:
    lam = eigen.lambda_first(p)
    shot = eigen.lambda_shooting(p, shoot_tol)
    b = eigen.lambda_bounds(p)
    excess = eigen.lambda_first_excess(p)
    rel = abs(shot.lambda_ - lam) / lam
    gap_bound = eigen.PI2_6 / (p + 1.0)
    limit_gap = (eigen.PI2_6 - 1.0) - excess
    sandwich = (
        b.lower_linear < lam <= b.upper_linear
        and lam < b.upper_refined
        and (b.lower_refined < lam)
        and 0.0 < limit_gap <= gap_bound
    )
    return {
        "p": p,
        "lambda_closed": lam,
        "lambda_shooting": shot.lambda_,
        "rel_diff": rel,
        "lower_linear": b.lower_linear,
        "upper_linear": b.upper_linear,
        "lower_refined": b.lower_refined,
        "upper_refined": b.upper_refined,
        "lambda_minus_p": excess,
        "limit_gap": limit_gap,
        "limit_gap_bound": gap_bound,
        "ok": bool(rel <= tol and sandwich),
    }


def cmd_eigen(cfg: RunConfig):
    prm = cfg.params
    ps = prm["p"]
    for p in ps:
        if not p > 1:
            raise DomainError(f"p must satisfy p > 1, got {p!r}")
    if not prm["tol"] > 0:
        raise UsageError("--tol must be positive")
    rows = [eigen_row(p, prm["tol"], prm["shoot_tol"]) for p in ps]
    header = list(rows[0])
    return _render(rows, cfg.output, header), EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAIL


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify, "eigen": cmd_eigen, "plot-data": cmd_plot_data}


# --- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", choices=("human", "csv", "json"), default="human", help="output format (default: human)")
    common.add_argument(
        "--output-path",
        help=f"write to this file instead of stdout; relative paths resolve against ${OUTPUT_DIR_ENV} when set",
    )

    parser = argparse.ArgumentParser(
        prog="gentrig",
        description="Generalized trigonometric functions, p-Laplacian eigenvalues and Redheffer-type inequality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate one function")
    ev.add_argument("function", choices=EVAL_FUNCTIONS)
    ev.add_argument("--p", type=_finite("--p"))
    ev.add_argument("--q", type=_finite("--q"))
    ev.add_argument("--x", type=_finite("--x"))

    tb = sub.add_parser("table", parents=[common], help="tabulate a function on a grid as CSV")
    tb.add_argument("function", choices=TABLE_FUNCTIONS)
    tb.add_argument("--p", type=_finite("--p"))
    tb.add_argument("--q", type=_finite("--q"))
    tb.add_argument("--x-from", type=_finite("--x-from"))
    tb.add_argument("--x-to", type=_finite("--x-to"))
    tb.add_argument("--p-from", type=_finite("--p-from"))
    tb.add_argument("--p-to", type=_finite("--p-to"))
    tb.add_argument("--n", type=int, default=10_000, help="number of rows (default: 10000)")

    vf = sub.add_parser("verify", parents=[common], help="certify inequalities on grids")
    vf.add_argument("suite", choices=SUITES + ("all",))
    vf.add_argument("--n", type=int, default=10_000, help="grid samples (default: 10000)")
    vf.add_argument("--offset", type=_finite("--offset"), default=1e-9, help="open-endpoint offset (default: 1e-9)")
    vf.add_argument("--refine", type=int, default=6, help="refinement levels around the worst sample (default: 6)")
    vf.add_argument("--alpha", type=_finite("--alpha"), help="upper exponent for zhu-sun (default: pi^2/12)")
    vf.add_argument("--beta", type=_finite("--beta"), help="lower exponent for zhu-sun (default: 1)")
    vf.add_argument("--p", type=_finite("--p"))
    vf.add_argument("--q", type=_finite("--q"))

    eg = sub.add_parser("eigen", parents=[common], help="closed-form eigenvalue vs shooting, with bounds")
    eg.add_argument("--p", type=_p_list, required=True, help="comma-separated p values")
    eg.add_argument("--tol", type=_finite("--tol"), default=1e-5, help="relative agreement tolerance (default: 1e-5)")
    eg.add_argument("--shoot-tol", type=_finite("--shoot-tol"), default=1e-8, help="bisection width (default: 1e-8)")

    pd = sub.add_parser("plot-data", parents=[common], help="CSV columns for plotting an inequality")
    pd.add_argument("function", choices=PLOT_DATA)
    pd.add_argument("--p", type=_finite("--p"))
    pd.add_argument("--q", type=_finite("--q"))
    pd.add_argument("--alpha", type=_finite("--alpha"))
    pd.add_argument("--beta", type=_finite("--beta"))
    pd.add_argument("--p-from", type=_finite("--p-from"))
    pd.add_argument("--p-to", type=_finite("--p-to"))
    pd.add_argument("--n", type=int, default=10_000, help="number of rows (default: 10000)")
    pd.add_argument("--offset", type=_finite("--offset"), default=1e-9, help="open-endpoint offset (default: 1e-9)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {k: v for k, v in vars(args).items() if k not in ("command", "output", "output_path")}
    return RunConfig(command=args.command, params=params, output=args.output, output_path=args.output_path)


def resolve_output_path(path: str) -> str:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text, code = COMMANDS[cfg.command](cfg)
    except (UsageError, DomainError) as exc:
        print(f"gentrig {cfg.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ConvergenceError, eigen.ShootingError) as exc:
        print(f"gentrig {cfg.command}: numerical failure: {exc}", file=stderr)
        return EXIT_FAIL
    if cfg.output_path:
        path = resolve_output_path(cfg.output_path)
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"gentrig {cfg.command}: cannot write {path}: {exc}", file=stderr)
            return EXIT_IO
    else:
        stdout.write(text)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
