"""Command-line front end: every check as a subcommand emitting CSV or JSON tables.

Exit codes: 0 success, 1 property violation, 2 usage or domain error,
3 numerical failure (non-convergence, truncation cap, cost cap).
The ``BASKAKOV_THREADS`` environment variable sets the number of worker
threads used for per-point grid evaluation (default 1).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import __version__
from .basis import BaskakovParams
from .cmcheck import (
    closed_c1_jet,
    cm_check,
    conjecture_harness,
    decay_check,
    elliptic_profile_jet,
    gruss_verify,
    logconvex_check,
    power_sum_jet,
)
from .errors import BaskakovError, CostCapError, DomainError, NonConvergenceError
from .hypergeom import elliptic_K_agm, gauss_2f1, pn_polynomial
from .jets import TaylorJet, series_exp
from .powersum import (
    alpha_alternating_sum,
    alpha_power_sum,
    power_sum_closed_c1_r2,
    power_sum_series,
)
from .quadrature import QuadratureSpec, laplace_multi_detailed, laplace_triple, parseval_integral
from .zeros import find_roots, measure_stats, psi_measure_stats, psi_zeros

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
SUBCOMMANDS = ("eval", "closed-form", "quad-check", "cm-check", "logconvex", "decay",
               "gruss", "zeros", "elliptic", "conjecture")

COLUMNS = {
    "eval": ["x", "value", "terms_used", "tail_bound", "status"],
    "closed-form": ["n", "x", "closed", "series", "rel_diff"],
    "quad-check": ["method", "x", "quadrature", "reference", "rel_diff"],
    "cm-check": ["x", "m", "signed_derivative", "status"],
    "logconvex": ["x", "gap", "threshold", "passed"],
    "decay": ["x", "m", "abs_derivative"],
    "gruss": ["n", "c", "x", "lhs", "bound_tight", "bound_simple", "mass", "k_trunc", "holds"],
    "zeros": ["n", "re_x", "im_x", "abs_2x_plus_1", "residual"],
    "zeros-pn": ["n", "re_z", "im_z", "abs_z", "residual"],
    "elliptic": ["k", "K_agm", "K_2f1", "abs_diff"],
    "conjecture": ["alpha", "r", "label", "min_signed", "violations", "indeterminate"],
}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    params: dict[str, Any]
    grid: tuple[float, float, int, bool] | None = None
    output: str | None = None
    fmt: str = "csv"
    tolerances: dict[str, float] = field(default_factory=dict)
    json_errors: bool = False

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.grid is not None and self.grid[2] < 1:
            raise UsageError("grid count must be at least 1")
        for name, tol in self.tolerances.items():
            if not tol > 0:
                raise UsageError(f"tolerance {name} must be positive")
        if self.fmt not in ("csv", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


@dataclass
class Outcome:
    columns: list[str]
    rows: list[list[Any]]
    summary: str
    code: int = EXIT_OK


# -- parsing helpers ----------------------------------------------------------


def parse_grid(spec: str) -> tuple[float, float, int, bool]:
    """``start:stop:count`` with an optional ``:log`` suffix."""
    parts = spec.split(":")
    log = False
    if len(parts) == 4:
        if parts[3] not in ("log", "lin"):
            raise argparse.ArgumentTypeError(f"grid suffix must be 'log' or 'lin', got {parts[3]!r}")
        log = parts[3] == "log"
        parts = parts[:3]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:count[:log], got {spec!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {spec!r}: {exc}") from None
    if count < 1:
        raise argparse.ArgumentTypeError("grid count must be at least 1")
    if log and not (start > 0 and stop > 0):
        raise argparse.ArgumentTypeError("log grid needs positive endpoints")
    return start, stop, count, log


def grid_points(grid: tuple[float, float, int, bool]) -> list[float]:
    start, stop, count, log = grid
    if count == 1:
        return [start]
    pts = np.geomspace(start, stop, count) if log else np.linspace(start, stop, count)
    return [float(v) for v in pts]


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _threads() -> int:
    raw = os.environ.get("BASKAKOV_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"BASKAKOV_THREADS must be an integer, got {raw!r}") from None


def _map(fn: Callable, items: Sequence) -> list:
    threads = _threads()
    if threads == 1 or len(items) < 2:
        return [fn(v) for v in items]
    with ThreadPoolExecutor(threads) as pool:
        return list(pool.map(fn, items))


# -- formatting ---------------------------------------------------------------


def _fmt(v: Any) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return "%.16e" % v
    return str(v)


def _json_value(v: Any) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return json.dumps(_fmt(v)) if not math.isfinite(v) else _fmt(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if v is None:
        return "null"
    return json.dumps(str(v))


def render(outcome: Outcome, fmt: str, meta: dict[str, Any]) -> str:
    if fmt == "csv":
        lines = [",".join(outcome.columns)]
        lines += [",".join(_fmt(v) for v in row) for row in outcome.rows]
        return "\n".join(lines) + "\n"
    rows = [dict(zip(outcome.columns, row)) for row in outcome.rows]
    return _json_value({"meta": meta, "rows": rows}) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- subcommands --------------------------------------------------------------


def _params(p: dict[str, Any]) -> BaskakovParams:
    return BaskakovParams(p["n"], p["c"], p["r"])


def _xs(cfg: RunConfig, default: Sequence[float]) -> list[float]:
    if cfg.grid is not None:
        return grid_points(cfg.grid)
    x = cfg.params.get("x")
    return [x] if x is not None else list(default)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b else abs(a - b)


def cmd_eval(cfg: RunConfig) -> Outcome:
    params = _params(cfg.params)
    xs = _xs(cfg, [])
    if not xs:
        raise UsageError("eval needs --x or --grid")
    rel_tol = cfg.tolerances.get("rel_tol", 1e-14)
    evals = _map(lambda x: power_sum_series(params, x, rel_tol), xs)
    rows = [[x, e.value, e.terms_used, e.tail_bound, e.status.value] for x, e in zip(xs, evals)]
    failed = [r for r in rows if r[4] != "Converged"]
    summary = "%.10g" % evals[0].value if len(xs) == 1 else f"eval: {len(xs)} points, {len(failed)} not converged"
    if failed:
        summary += f" (TruncationCapHit at x={failed[0][0]})"
    return Outcome(COLUMNS["eval"], rows, summary, EXIT_NUMERIC if failed else EXIT_OK)


def cmd_closed_form(cfg: RunConfig) -> Outcome:
    n = cfg.params["n"]
    xs = _xs(cfg, [0, 0.1, 0.5, 1, 2, 5, 10])
    tol = cfg.tolerances.get("tol", 1e-10)
    rows, code = [], EXIT_OK
    for x in xs:
        closed = power_sum_closed_c1_r2(n, x)
        ser = power_sum_series(BaskakovParams(n, 1.0, 2), x)
        if not ser.converged:
            code = EXIT_NUMERIC
        rows.append([n, x, closed, ser.value, _rel(ser.value, closed)])
    worst = max(r[4] for r in rows)
    if code == EXIT_OK and worst > tol:
        code = EXIT_VIOLATION
    return Outcome(COLUMNS["closed-form"], rows, f"closed-form: n={n}, max rel diff {worst:.3e} (tol {tol:g})", code)


def cmd_quad_check(cfg: RunConfig) -> Outcome:
    p = cfg.params
    method = p["method"]
    xs = _xs(cfg, [0, 0.5, 1, 2, 5])
    tol = cfg.tolerances.get("tol", 1e-6 if method != "parseval" else 1e-10)
    rows = []
    for x in xs:
        if method == "triple":
            quad = laplace_triple(p["alpha"], x, QuadratureSpec(p["radial_nodes"], p["angular_nodes"]))
            ref = alpha_power_sum(p["alpha"], x, 2).value
        elif method == "parseval":
            quad = parseval_integral(p["n"], x, p["angular_nodes"], c=p["c"])
            ref = power_sum_series(BaskakovParams(p["n"], p["c"], 2), x).value
        else:
            res = laplace_multi_detailed(p["alpha"], p["r"], x, QuadratureSpec(p["radial_nodes"], p["angular_nodes"]))
            quad = res.value
            ref = alpha_alternating_sum(p["alpha"], x, p["r"])
            if res.min_re_g < -1e-12:
                raise NonConvergenceError(f"negative real part {res.min_re_g} of the exponent")
        rows.append([method, x, quad, ref, _rel(quad, ref)])
    worst = max(r[4] for r in rows)
    code = EXIT_VIOLATION if worst > tol else EXIT_OK
    return Outcome(COLUMNS["quad-check"], rows, f"quad-check {method}: max rel diff {worst:.3e} (tol {tol:g})", code)


def _target(p: dict[str, Any]) -> Callable[[float, int], TaylorJet]:
    if p.get("closed"):
        return lambda x0, m: closed_c1_jet(p["n"], x0, m)
    params = _params(p)
    return lambda x0, m: power_sum_jet(params, x0, m)


def _gaussian_jet(x0: float, order: int) -> TaylorJet:
    # exp(-x^2) around x0: log-series -x0^2 - 2 x0 eps - eps^2
    a = np.zeros(order + 1)
    a[0] = -x0 * x0
    if order >= 1:
        a[1] = -2.0 * x0
    if order >= 2:
        a[2] = -1.0
    return TaylorJet(x0, series_exp(a))


def cmd_cm_check(cfg: RunConfig) -> Outcome:
    p = cfg.params
    xs = _xs(cfg, [0, 0.5, 1, 2, 5])
    target = elliptic_profile_jet if p.get("elliptic") else _target(p)
    report = cm_check(target, xs, p["order"], cfg.tolerances.get("tol_abs", 1e-12), cfg.tolerances.get("tol_rel", 1e-8))
    bad = {(x, m) for x, m, _ in report.violations}
    unsure = {(x, m) for x, m, _ in report.indeterminate}
    rows = [[x, m, v, "violation" if (x, m) in bad else "indeterminate" if (x, m) in unsure else "ok"]
            for x, m, v in report.rows()]
    summary = (f"cm-check: verdict {report.verdict.value}, {len(xs)} points, orders <= {p['order']}, "
               f"{len(report.violations)} violations, {len(report.indeterminate)} indeterminate")
    return Outcome(COLUMNS["cm-check"], rows, summary, EXIT_VIOLATION if report.violations else EXIT_OK)


def cmd_logconvex(cfg: RunConfig) -> Outcome:
    p = cfg.params
    xs = _xs(cfg, [0, 0.5, 1, 2, 5])
    target = _gaussian_jet if p.get("gaussian") else _target(p)
    report = logconvex_check(target, xs, cfg.tolerances.get("tol", 1e-8))
    rows = [[x, g, t, bool(ok)] for x, g, t, ok in zip(report.grid, report.gap, report.threshold, report.passed)]
    status = "holds" if report.holds else "fails"
    return Outcome(COLUMNS["logconvex"], rows, f"logconvex: {status} on {len(xs)} points",
                   EXIT_OK if report.holds else EXIT_VIOLATION)


def cmd_decay(cfg: RunConfig) -> Outcome:
    p = cfg.params
    report = decay_check(_target(p), p["order"], p["x_list"], cfg.tolerances.get("tol", 1e-6))
    rows = [[x, m, float(report.magnitudes[i, m])] for i, x in enumerate(report.x) for m in range(report.max_order + 1)]
    failing = [m for m in range(report.max_order + 1)
               if not (report.decreasing[m] and report.small_at_end[m])]
    summary = "decay: holds" if report.holds else f"decay: fails for orders {failing}"
    return Outcome(COLUMNS["decay"], rows, summary, EXIT_OK if report.holds else EXIT_VIOLATION)


def _samples(kind: str, rng: np.random.Generator, n: int):
    if kind == "alternating":
        return lambda k: (-1.0) ** k
    if kind == "sin":
        return lambda k: math.sin(k / n)
    cache: dict[int, float] = {}
    stream = rng.uniform(-1.0, 1.0, size=1 << 16)

    def draw(k: int) -> float:
        return cache.setdefault(k, float(stream[k % len(stream)]))
    return draw


def cmd_gruss(cfg: RunConfig) -> Outcome:
    p = cfg.params
    rng = np.random.default_rng(p["seed"])
    xs = _xs(cfg, [1.0])
    params = _params(p)
    f = _samples(p["f"], rng, params.n)
    g = _samples(p["g"], rng, params.n)
    rows, ok = [], True
    for x in xs:
        rep = gruss_verify(params, x, f, g, p.get("k_trunc"))
        holds = all(rep.holds)
        ok &= holds
        rows.append([params.n, params.c, x, rep.lhs, rep.bound_tight, rep.bound_simple, rep.mass, rep.k_trunc, holds])
    return Outcome(COLUMNS["gruss"], rows, f"gruss: {'holds' if ok else 'violated'} at {len(xs)} points",
                   EXIT_OK if ok else EXIT_VIOLATION)


def cmd_zeros(cfg: RunConfig) -> Outcome:
    p = cfg.params
    n = p["n"]
    if p["kind"] == "pn":
        zs = find_roots(pn_polynomial(n))
        rows = [[n, z.real, z.imag, abs(z), res] for z, res in zip(zs.roots, zs.residuals)]
        columns = COLUMNS["zeros-pn"]
        stats = measure_stats(zs, p["test_radii"]) if zs.converged else None
    else:
        zs = psi_zeros(n)
        rows = [[n, x.real, x.imag, abs(2 * x + 1), res] for x, res in zip(zs.roots, zs.residuals)]
        columns = COLUMNS["zeros"]
        stats = psi_measure_stats(zs, p["test_radii"]) if zs.converged else None
    if stats is None:
        return Outcome(columns, rows, f"zeros: not converged after {zs.iterations} sweeps", EXIT_NUMERIC)
    summary = (f"zeros: {len(zs)} roots, {zs.iterations} sweeps, radial_dev_max {stats.radial_dev_max:.3e}, "
               f"angular_ks {stats.angular_ks:.4f}, potential_error_max {stats.potential_error_max():.4e} "
               "(empirical diagnostics)")
    return Outcome(columns, rows, summary)


def cmd_elliptic(cfg: RunConfig) -> Outcome:
    ks = _xs(cfg, [i / 10 for i in range(10)])
    tol = cfg.tolerances.get("tol", 1e-11)
    rows = []
    for k in ks:
        if not 0 <= k < 1:
            raise DomainError(f"modulus must lie in [0, 1), got {k}")
        agm = elliptic_K_agm(k)
        hyp = 0.5 * math.pi * gauss_2f1(0.5, 0.5, 1.0, k * k)
        rows.append([k, agm, hyp, abs(agm - hyp)])
    worst = max(r[3] for r in rows)
    return Outcome(COLUMNS["elliptic"], rows, f"elliptic: max abs diff {worst:.3e} (tol {tol:g})",
                   EXIT_VIOLATION if worst > tol else EXIT_OK)


def cmd_conjecture(cfg: RunConfig) -> Outcome:
    p = cfg.params
    xs = _xs(cfg, grid_points((0.0, 5.0, 11, False)))
    rows_out = conjecture_harness(p["alpha_list"], p["r_list"], xs, p["order"])
    rows = [[row.alpha, row.r, row.label, row.report.min_value, len(row.report.violations),
             len(row.report.indeterminate)] for row in rows_out]
    bad = [row for row in rows_out if row.report.violations]
    summary = f"conjecture: {len(rows_out) - len(bad)}/{len(rows_out)} cases consistent with conjecture"
    return Outcome(COLUMNS["conjecture"], rows, summary, EXIT_VIOLATION if bad else EXIT_OK)


HANDLERS = {
    "eval": cmd_eval,
    "closed-form": cmd_closed_form,
    "quad-check": cmd_quad_check,
    "cm-check": cmd_cm_check,
    "logconvex": cmd_logconvex,
    "decay": cmd_decay,
    "gruss": cmd_gruss,
    "zeros": cmd_zeros,
    "elliptic": cmd_elliptic,
    "conjecture": cmd_conjecture,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one subcommand, write its table, print a one-line summary."""
    stdout = stdout or sys.stdout
    outcome = HANDLERS[cfg.subcommand](cfg)
    meta = {"tool": "baskakov", "version": __version__, "subcommand": cfg.subcommand,
            "config": {k: v for k, v in sorted(cfg.params.items()) if v is not None},
            "grid": list(cfg.grid) if cfg.grid else None, "tolerances": dict(sorted(cfg.tolerances.items()))}
    text = render(outcome, cfg.fmt, meta)
    if cfg.output:
        write_atomic(cfg.output, text)
    print(outcome.summary, file=stdout)
    return outcome.code


# -- argument parsing -----------------------------------------------------------


def _common(sp: argparse.ArgumentParser, grid: bool = True) -> None:
    sp.add_argument("--output", help="write the table to this path (atomic)")
    sp.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    sp.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    if grid:
        sp.add_argument("--grid", type=parse_grid, help="start:stop:count[:log]")


def _ncr(sp: argparse.ArgumentParser, r_default: int = 2) -> None:
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--c", type=float, default=1.0)
    sp.add_argument("--r", type=int, default=r_default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="baskakov", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        cols = COLUMNS[name]
        return sub.add_parser(name, help=help_text, description=f"{help_text}. CSV columns: {', '.join(cols)}.")

    sp = add("eval", "evaluate psi_{n,c}^{[r]} by its certified series")
    _ncr(sp)
    sp.add_argument("--x", type=float)
    sp.add_argument("--rel-tol", type=float, default=1e-14)
    _common(sp)

    sp = add("closed-form", "compare the c=1, r=2 closed form with the series")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--x", type=float)
    sp.add_argument("--tol", type=float, default=1e-10)
    _common(sp)

    sp = add("quad-check", "compare an integral representation with the series")
    sp.add_argument("--method", choices=("triple", "parseval", "multi"), default="triple")
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--c", type=float, default=1.0)
    sp.add_argument("--r", type=int, default=4)
    sp.add_argument("--x", type=float)
    sp.add_argument("--radial-nodes", type=int, default=64)
    sp.add_argument("--angular-nodes", type=int, default=256)
    sp.add_argument("--tol", type=float)
    _common(sp)

    sp = add("cm-check", "sign pattern of derivatives (complete monotonicity)")
    _ncr(sp)
    sp.add_argument("--order", type=int, default=20)
    sp.add_argument("--closed", action="store_true", help="use the c=1, r=2 closed form")
    sp.add_argument("--elliptic", action="store_true", help="check K(x/(1+x))/(1+x) instead")
    sp.add_argument("--tol-abs", type=float, default=1e-12)
    sp.add_argument("--tol-rel", type=float, default=1e-8)
    _common(sp)

    sp = add("logconvex", "check f f'' - f'^2 >= 0")
    _ncr(sp)
    sp.add_argument("--closed", action="store_true")
    sp.add_argument("--gaussian", action="store_true", help="synthetic counterexample exp(-x^2)")
    sp.add_argument("--tol", type=float, default=1e-8)
    _common(sp)

    sp = add("decay", "derivative magnitudes along increasing x")
    _ncr(sp)
    sp.add_argument("--order", type=int, default=5)
    sp.add_argument("--x-list", type=_float_list, default=[10.0, 50.0, 100.0, 1000.0])
    sp.add_argument("--tol", type=float, default=1e-6)
    _common(sp, grid=False)

    sp = add("gruss", "Chebyshev-Gruss inequality for the operator")
    _ncr(sp)
    sp.add_argument("--x", type=float)
    sp.add_argument("--f", choices=("alternating", "sin", "random"), default="alternating")
    sp.add_argument("--g", choices=("alternating", "sin", "random"), default="alternating")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--k-trunc", type=int)
    _common(sp)

    sp = add("zeros", "zeros of psi_{n,1} (or of P_n with --kind pn)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=("psi", "pn"), default="psi")
    sp.add_argument("--test-radii", type=_float_list, default=[2.0])
    _common(sp, grid=False)

    sp = add("elliptic", "AGM versus hypergeometric complete elliptic integral")
    sp.add_argument("--tol", type=float, default=1e-11)
    _common(sp)

    sp = add("conjecture", "sign-pattern sweep for f_alpha^{[r]}")
    sp.add_argument("--alpha-list", type=_float_list, default=[0.5, 1.0, 2.0])
    sp.add_argument("--r-list", type=_int_list, default=[4])
    sp.add_argument("--order", type=int, default=12)
    _common(sp)
    return ap


_TOLERANCE_KEYS = ("tol", "tol_abs", "tol_rel", "rel_tol")
_GENERIC_KEYS = ("subcommand", "output", "fmt", "json_errors", "grid")


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    d = vars(ns).copy()
    tolerances = {k: d.pop(k) for k in _TOLERANCE_KEYS if k in d and d[k] is not None}
    for k in _TOLERANCE_KEYS:
        d.pop(k, None)
    generic = {k: d.pop(k, None) for k in _GENERIC_KEYS}
    return RunConfig(generic["subcommand"], d, generic["grid"], generic["output"], generic["fmt"] or "csv",
                     tolerances, bool(generic["json_errors"]))


def _report_error(exc: BaseException, code: int, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code}), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json-errors" in argv
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(config_from_args(ns))
    except (NonConvergenceError, CostCapError, OverflowError, ArithmeticError) as exc:
        return _report_error(exc, EXIT_NUMERIC, as_json)
    except (UsageError, DomainError, ValueError) as exc:
        return _report_error(exc, EXIT_USAGE, as_json)
    except BaskakovError as exc:
        return _report_error(exc, EXIT_NUMERIC, as_json)


if __name__ == "__main__":
    raise SystemExit(main())
