"""Complete monotonicity, log-convexity, decay and Chebyshev-Gruss checks.

Derivatives of the power sums come from Taylor jets summed term by term over
the same index range the scalar series certifies (extended until the jet
contributions of the dropped terms are negligible).  A target for the checks
is any callable ``target(x0, order) -> TaylorJet``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .basis import K_CAP, BaskakovParams, log_weights
from .errors import DomainError
from .jets import MAX_ORDER, TaylorJet, series_exp, series_mul, series_pow
from .powersum import _alpha_truncation, _coeffs, _szasz_truncation

__all__ = [
    "Verdict",
    "CMReport",
    "LogConvexReport",
    "DecayReport",
    "GrussReport",
    "ConjectureRow",
    "TOL_ABS",
    "TOL_REL",
    "taylor_basis_power",
    "alpha_power_sum_jet",
    "power_sum_jet",
    "closed_c1_jet",
    "elliptic_profile_jet",
    "psi_target",
    "cm_check",
    "cm_check_closed_c1",
    "logconvex_check",
    "decay_check",
    "gruss_verify",
    "conjecture_harness",
]

TOL_ABS = 1e-12
TOL_REL = 1e-8

JetProvider = Callable[[float, int], TaylorJet]


class Verdict(str, enum.Enum):
    CONSISTENT_WITH_CM = "ConsistentWithCM"
    VIOLATION_FOUND = "ViolationFound"


def _check_order(order: int) -> None:
    if int(order) != order or not 0 <= order <= MAX_ORDER:
        raise DomainError(f"order must lie in [0, {MAX_ORDER}], got {order!r}")


# -- jets of basis functions and power sums ---------------------------------


def _hybrid_jets(a: np.ndarray, y0: float, q: np.ndarray, q_log: np.ndarray,
                 log_w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Jets of ``w * (1 + eps/y0)^a * Q`` per row, with their roundoff scales.

    ``a`` holds non-negative integers, ``q`` the series of the second factor,
    ``q_log`` its logarithm and ``log_w`` the row weights.  The product of the
    (terminating) binomial series with ``Q`` is free of cancellation for small
    ``y0``; the exponential of the summed log-series is better when ``a/y0`` is
    moderate.  Each coefficient takes the route whose absolute-value majorant
    is smaller.  The weight is folded in before exponentiating so that
    ``w * y0^-j`` never overflows.
    """
    order = q.shape[1] - 1
    log_p = np.full(q.shape, -np.inf)
    log_p[:, 0] = log_w
    log_y0 = math.log(y0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for j in range(1, order + 1):
            live = a - j + 1 > 0
            step = np.where(live, np.log(np.where(live, a - j + 1, 1.0) / j) - log_y0, -np.inf)
            log_p[:, j] = log_p[:, j - 1] + step
        p = np.exp(log_p)
        m = np.arange(1, order + 1, dtype=float)
        sign = np.where(m % 2 == 1, 1.0, -1.0) / m
        log_series = q_log.copy()
        log_series[:, 0] = log_w
        log_series[:, 1:] += sign * np.outer(a, np.exp(-m * log_y0))
        majorant = np.abs(log_series)
        majorant[:, 0] = log_w
        e1, s1 = series_mul(p, q), series_mul(p, np.abs(q))
        e2, s2 = series_exp(log_series), series_exp(majorant)
    pick = (s1 <= s2) | ~np.isfinite(s2) | ~np.isfinite(e2)
    return np.where(pick, e1, e2), np.where(pick, s1, s2)


def _binomial_factor(b: np.ndarray, v: float, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Series and log-series of ``(1 + v eps)^b`` per row."""
    q = np.zeros((len(b), order + 1))
    q[:, 0] = 1.0
    for j in range(1, order + 1):
        q[:, j] = q[:, j - 1] * (b - j + 1) / j * v
    m = np.arange(1, order + 1, dtype=float)
    log_q = np.zeros_like(q)
    log_q[:, 1:] = np.outer(b, np.where(m % 2 == 1, 1.0, -1.0) / m * v**m)
    return q, log_q


def _term_jets_at_zero(log_c: np.ndarray, k: np.ndarray, r: int, alpha: float, order: int) -> np.ndarray:
    """Jets at ``y = 0`` of ``C_k^r y^(rk) (1+y)^(-r(alpha+k))``."""
    out = np.zeros((len(k), order + 1))
    for row, (lc, kk) in enumerate(zip(log_c, k)):
        shift = int(r * kk)
        if shift > order:
            continue
        base = np.zeros(order + 1 - shift)
        base[0] = 1.0
        if len(base) > 1:
            base[1] = 1.0
        out[row, shift:] = math.exp(r * lc) * series_pow(base, -r * (alpha + kk))
    return out


def _sum_jets(jets: np.ndarray, scales: np.ndarray, log_shift: float) -> tuple[np.ndarray, np.ndarray]:
    factor = math.exp(log_shift)
    coeffs = np.array([math.fsum(col) for col in jets.T]) * factor
    scale = (np.sum(np.abs(jets), axis=0) + np.sum(scales, axis=0)) * factor
    return coeffs, scale


def _alpha_jet_positive(alpha: float, r: int, y0: float, order: int, rel_tol: float) -> tuple[np.ndarray, np.ndarray]:
    tr = _alpha_truncation(alpha, y0, r, rel_tol)
    log_p = tr.log_p
    v = 1.0 / (1.0 + y0)
    # Extend the index range until the last kept jet row is negligible.
    while True:
        k = np.arange(len(log_p), dtype=float)
        lw = r * log_p
        shift = float(lw.max())
        q, log_q = _binomial_factor(-r * (alpha + k), v, order)
        jets, scales = _hybrid_jets(r * k, y0, q, log_q, lw - shift)
        coeffs, scale = _sum_jets(jets, scales, shift)
        last = np.abs(jets[-1]) * math.exp(shift)
        if np.all(last <= 1e-18 * np.maximum(scale, 1e-300)) or len(log_p) > K_CAP:
            return coeffs, scale
        more = max(64, len(log_p) // 2)
        log_p = log_weights(alpha, y0, len(log_p) - 1 + more)


def alpha_power_sum_jet(alpha: float, r: int, y0: float, order: int, rel_tol: float = 1e-18) -> TaylorJet:
    """Jet of ``f_alpha^{[r]}`` in its own variable at ``y0 >= 0`` (positive-term sum)."""
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    if not y0 >= 0:
        raise DomainError(f"expansion point must be non-negative, got {y0!r}")
    _check_order(order)
    if y0 == 0:
        kmax = order // r
        k = np.arange(kmax + 1, dtype=float)
        log_c = log_weights(alpha, 1.0, kmax) - k * math.log(0.5) + alpha * math.log(2.0)
        jets = _term_jets_at_zero(log_c, k, r, alpha, order)
        return TaylorJet(0.0, jets.sum(axis=0), np.abs(jets).sum(axis=0))
    coeffs, scale = _alpha_jet_positive(alpha, r, y0, order, rel_tol)
    return TaylorJet(y0, coeffs, scale)


def _szasz_jet(n: int, r: int, x0: float, order: int) -> TaylorJet:
    if x0 == 0:
        kmax = order // r
        out = np.zeros(order + 1)
        for k in range(kmax + 1):
            # (n x)^(rk) e^(-rnx) / (k!)^r
            shift = r * k
            e = np.zeros(order + 1 - shift)
            if len(e) > 1:
                e[1] = -r * n
            out[shift:] += n ** (r * k) / math.factorial(k) ** r * series_exp(e)
        return TaylorJet(0.0, out)
    tr = _szasz_truncation(n, x0, r, 1e-18)
    log_p = tr.log_p
    k = np.arange(len(log_p), dtype=float)
    lw = r * log_p
    shift = float(lw.max())
    # e^(-r n eps) for every row
    j = np.arange(order + 1)
    q = np.tile((-r * n) ** j / np.array([math.factorial(i) for i in j], dtype=float), (len(k), 1))
    log_q = np.zeros_like(q)
    if order:
        log_q[:, 1] = -r * n
    jets, scales = _hybrid_jets(r * k, x0, q, log_q, lw - shift)
    coeffs, scale = _sum_jets(jets, scales, shift)
    return TaylorJet(x0, coeffs, scale)


def power_sum_jet(params: BaskakovParams, x0: float, order: int) -> TaylorJet:
    """Jet of ``psi_{n,c}^{[r]}`` at ``x0``; uses ``psi_{n,c}(x) = f_{n/c}(c x)`` for ``c > 0``."""
    _check_order(order)
    if not x0 >= 0:
        raise DomainError(f"x0 must be non-negative, got {x0!r}")
    if params.c == 0:
        return _szasz_jet(params.n, params.r, x0, order)
    c = params.c
    jet = alpha_power_sum_jet(params.alpha, params.r, c * x0, order)
    cm = c ** np.arange(order + 1, dtype=float)
    return TaylorJet(x0, jet.coeffs * cm, None if jet.scale is None else jet.scale * cm)


def psi_target(params: BaskakovParams) -> JetProvider:
    return lambda x0, order: power_sum_jet(params, x0, order)


def taylor_basis_power(params: BaskakovParams, k: int, x0: float, order: int) -> TaylorJet:
    """Jet of ``(p_{n,k}^{[c]})^r`` at ``x0 >= 0`` for ``c > 0``."""
    _check_order(order)
    if params.c <= 0:
        raise DomainError("taylor_basis_power needs c > 0")
    if not x0 >= 0:
        raise DomainError(f"x0 must be non-negative, got {x0!r}")
    if int(k) != k or k < 0:
        raise DomainError("k must be a non-negative integer")
    alpha, c, r = params.alpha, params.c, params.r
    y0 = c * x0
    log_c = float(log_weights(alpha, 1.0, int(k))[-1] - k * math.log(0.5) + alpha * math.log(2.0))
    kk = np.array([float(k)])
    if y0 == 0:
        jet = _term_jets_at_zero(np.array([log_c]), kk, r, alpha, order)[0]
    else:
        log_p = log_c + k * math.log(y0) - (alpha + k) * math.log1p(y0)
        q, log_q = _binomial_factor(-r * (alpha + kk), 1.0 / (1.0 + y0), order)
        jets, scales = _hybrid_jets(r * kk, y0, q, log_q, np.array([r * log_p]))
        cm = c ** np.arange(order + 1, dtype=float)
        return TaylorJet(x0, jets[0] * cm, scales[0] * cm)
    return TaylorJet(x0, jet * c ** np.arange(order + 1, dtype=float))


def closed_c1_jet(n: int, x0: float, order: int) -> TaylorJet:
    """Exact-coefficient jet of ``psi_{n,1}`` from its odd-power representation.

    ``d^m/dx^m (1+2x)^(-p) / m! = (-2)^m binom(p+m-1, m) (1+2x)^(-p-m)``.
    """
    _check_order(order)
    s = 1.0 + 2.0 * x0
    if s <= 0:
        raise DomainError("closed_c1_jet needs x0 > -1/2")
    coeffs = [float(c) for c in _coeffs(int(n))]
    out = np.zeros(order + 1)
    for m in range(order + 1):
        terms = [c * math.comb(2 * j + m, m) * s ** (-(2 * j + 1) - m) for j, c in enumerate(coeffs)]
        out[m] = (-2.0) ** m * math.fsum(terms)
    return TaylorJet(x0, out)


def elliptic_profile_jet(x0: float, order: int) -> TaylorJet:
    """Jet of ``K(x/(1+x)) / (1+x)`` by running the AGM on jets."""
    _check_order(order)
    if not x0 >= 0:
        raise DomainError(f"x0 must be non-negative, got {x0!r}")
    x = TaylorJet.variable(x0, order)
    mod = x / (1.0 + x)
    a = TaylorJet.constant(1.0, x0, order)
    b = ((1.0 - mod) * (1.0 + mod)).sqrt()
    for _ in range(64):
        if np.all(np.abs(a.coeffs - b.coeffs) <= 1e-17 * np.maximum(np.abs(a.coeffs), 1.0)):
            break
        a, b = 0.5 * (a + b), (a * b).sqrt()
    agm = 0.5 * (a + b)
    return (0.5 * math.pi) / (agm * (1.0 + x))


# -- reports ----------------------------------------------------------------


@dataclass
class CMReport:
    grid: list[float]
    max_order: int
    min_signed: np.ndarray  # (len(grid), max_order+1) of (-1)^m f^(m)(x)
    violations: list[tuple[float, int, float]]
    indeterminate: list[tuple[float, int, float]] = field(default_factory=list)
    tol_abs: float = TOL_ABS
    tol_rel: float = TOL_REL

    @property
    def verdict(self) -> Verdict:
        return Verdict.VIOLATION_FOUND if self.violations else Verdict.CONSISTENT_WITH_CM

    @property
    def min_value(self) -> float:
        return float(np.min(self.min_signed))

    def rows(self):
        for i, x in enumerate(self.grid):
            for m in range(self.max_order + 1):
                yield x, m, float(self.min_signed[i, m])


def _grid(grid: Sequence[float]) -> list[float]:
    g = [float(v) for v in grid]
    if not g:
        raise DomainError("grid must not be empty")
    if any(not v >= 0 for v in g):
        raise DomainError("grid points must be non-negative")
    return g


def cm_check(target: JetProvider, grid: Sequence[float], order: int = 20,
             tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> CMReport:
    """Sign pattern ``(-1)^m f^(m)(x) >= 0`` on a grid for ``m <= order``.

    Negative entries within ``tol_abs + tol_rel * scale`` are recorded as
    numerically indeterminate rather than as violations; ``scale`` is the
    roundoff scale carried by the jet.
    """
    _check_order(order)
    g = _grid(grid)
    signs = np.where(np.arange(order + 1) % 2 == 0, 1.0, -1.0)
    table = np.zeros((len(g), order + 1))
    violations, indeterminate = [], []
    for i, x in enumerate(g):
        jet = target(x, order)
        vals = signs * jet.derivatives()
        scales = jet.derivative_scales()
        table[i] = vals
        for m in range(order + 1):
            v = float(vals[m])
            if v < -tol_abs - tol_rel * scales[m]:
                violations.append((x, m, v))
            elif v < 0:
                indeterminate.append((x, m, v))
    return CMReport(g, order, table, violations, indeterminate, tol_abs, tol_rel)


def cm_check_closed_c1(n: int, grid: Sequence[float], order: int = 20) -> CMReport:
    return cm_check(lambda x0, m: closed_c1_jet(n, x0, m), grid, order)


@dataclass
class LogConvexReport:
    grid: list[float]
    gap: np.ndarray  # f f'' - f'^2
    threshold: np.ndarray  # -tol * (f |f''| + f'^2)

    @property
    def passed(self) -> np.ndarray:
        return self.gap >= self.threshold

    @property
    def holds(self) -> bool:
        return bool(np.all(self.passed))


def logconvex_check(target: JetProvider, grid: Sequence[float], tol: float = TOL_REL) -> LogConvexReport:
    """Check ``f f'' - f'^2 >= -tol (f |f''| + f'^2)`` at every grid point."""
    g = [float(v) for v in grid]
    gap, thr = np.zeros(len(g)), np.zeros(len(g))
    for i, x in enumerate(g):
        f0, f1, f2 = target(x, 2).derivatives()
        if not f0 > 0:
            raise DomainError(f"log-convexity needs a positive function, got f({x}) = {f0}")
        gap[i] = f0 * f2 - f1 * f1
        thr[i] = -tol * (f0 * abs(f2) + f1 * f1)
    return LogConvexReport(g, gap, thr)


@dataclass
class DecayReport:
    x: list[float]
    max_order: int
    magnitudes: np.ndarray  # (len(x), max_order+1) of |f^(m)(x)|
    tol_abs: float

    @property
    def decreasing(self) -> np.ndarray:
        """Per order: strictly decreasing along the x list."""
        return np.all(np.diff(self.magnitudes, axis=0) < 0, axis=0)

    @property
    def small_at_end(self) -> np.ndarray:
        return self.magnitudes[-1] < self.tol_abs

    @property
    def holds(self) -> bool:
        return bool(np.all(self.decreasing) and np.all(self.small_at_end))


def decay_check(target: JetProvider, order: int, x_list: Sequence[float], tol_abs: float = 1e-6) -> DecayReport:
    """``|f^(m)|`` decreasing along ``x_list`` and below ``tol_abs`` at its last point."""
    _check_order(order)
    xs = [float(v) for v in x_list]
    if len(xs) < 2 or any(b <= a for a, b in zip(xs, xs[1:])):
        raise DomainError("x_list must be strictly increasing with at least two points")
    if xs[-1] < 50:
        raise DomainError("the last x must be at least 50")
    mags = np.array([np.abs(target(x, order).derivatives()) for x in xs])
    return DecayReport(xs, order, mags, tol_abs)


# -- Chebyshev-Gruss ----------------------------------------------------------


@dataclass
class GrussReport:
    x: float
    lhs: float
    sum_sq: float
    bound_tight: float
    bound_simple: float
    osc_f: float
    osc_g: float
    mass: float
    k_trunc: int
    holds: tuple[bool, bool]
    osc_f_global: float | None = None
    osc_g_global: float | None = None


def _weights(params: BaskakovParams, x: float, kmax: int) -> np.ndarray:
    if x == 0:
        w = np.zeros(kmax + 1)
        w[0] = 1.0
        return w
    if params.c == 0:
        nx = params.n * x
        k = np.arange(kmax + 1, dtype=float)
        lg = np.array([math.lgamma(v + 1.0) for v in k])
        return np.exp(-nx + k * math.log(nx) - lg)
    return np.exp(log_weights(params.alpha, params.c * x, kmax))


def _auto_trunc(params: BaskakovParams, x: float, mass_target: float) -> int:
    kmax = 64
    while kmax <= K_CAP:
        w = _weights(params, x, kmax)
        cum = np.cumsum(w)
        hit = np.nonzero(cum >= mass_target)[0]
        # Past the mode the remaining mass only shrinks, so the first hit is final.
        if hit.size:
            return int(hit[0])
        kmax *= 2
    raise DomainError("truncation mass not reached within the index cap")


def _samples(s, k: np.ndarray) -> np.ndarray:
    if callable(s):
        return np.array([float(s(int(i))) for i in k])
    arr = np.asarray(s, dtype=float)
    if len(arr) < len(k):
        raise DomainError("sample array shorter than the truncation range")
    return arr[: len(k)]


def gruss_verify(params: BaskakovParams, x: float, f_samples, g_samples, k_trunc: int | None = None,
                 tol: float = 1e-12, osc_f_bound: float | None = None,
                 osc_g_bound: float | None = None) -> GrussReport:
    """Chebyshev-Gruss check for ``L f = sum_k p_{n,k}^{[c]}(x) f(k/n)``.

    ``f_samples``/``g_samples`` map an index ``k`` to ``f(k/n)`` (callable or
    array).  Oscillations are taken over the truncated index range; optional
    global bounds can be supplied and are then used in the right-hand sides.
    """
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    mass_target = 1.0 - 1e-12
    if k_trunc is None:
        k_trunc = _auto_trunc(params, x, mass_target)
    w = _weights(params, x, int(k_trunc))
    mass = math.fsum(w)
    if mass < mass_target:
        raise DomainError(f"truncated weight mass {mass!r} below 1 - 1e-12 at K = {k_trunc}")
    k = np.arange(int(k_trunc) + 1)
    f, g = _samples(f_samples, k), _samples(g_samples, k)
    lf, lg, lfg = math.fsum(w * f), math.fsum(w * g), math.fsum(w * f * g)
    lhs = abs(lfg - lf * lg)
    sum_sq = math.fsum(w * w)
    osc_f, osc_g = float(np.ptp(f)), float(np.ptp(g))
    of = osc_f if osc_f_bound is None else max(osc_f, osc_f_bound)
    og = osc_g if osc_g_bound is None else max(osc_g, osc_g_bound)
    tight = 0.5 * (1.0 - sum_sq) * of * og
    simple = 0.5 * of * og
    return GrussReport(float(x), lhs, sum_sq, tight, simple, osc_f, osc_g, mass, int(k_trunc),
                       (lhs <= tight + tol, tight <= simple), osc_f_bound, osc_g_bound)


# -- conjecture harness -------------------------------------------------------

CONJECTURE_LABEL = "consistent with conjecture"


@dataclass
class ConjectureRow:
    alpha: float
    r: int
    report: CMReport

    @property
    def label(self) -> str:
        if self.report.violations:
            return "violation found"
        return CONJECTURE_LABEL

    @property
    def detail(self) -> str:
        g = self.report.grid
        return (f"{self.label}: no sign violation at {len(g)} points in [{min(g)}, {max(g)}], "
                f"orders <= {self.report.max_order}, tol_abs={self.report.tol_abs}, "
                f"tol_rel={self.report.tol_rel}" if not self.report.violations else
                f"{self.label}: {len(self.report.violations)} sign violations")


def conjecture_harness(alpha_list: Sequence[float], r_list: Sequence[int], grid: Sequence[float],
                       order: int = 12) -> list[ConjectureRow]:
    """Sign-pattern sweep for ``f_alpha^{[r]}`` with even ``r``; never a proof."""
    rows = []
    for r in r_list:
        if r not in (2, 4, 6):
            raise DomainError(f"r must be one of 2, 4, 6, got {r!r}")
        for alpha in alpha_list:
            if not alpha > 0:
                raise DomainError("alpha must be positive")
            target = (lambda a, rr: lambda x0, m: alpha_power_sum_jet(a, rr, x0, m))(alpha, r)
            rows.append(ConjectureRow(float(alpha), int(r), cm_check(target, grid, order)))
    return rows
