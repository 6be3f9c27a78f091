"""Power sums ``psi_{n,c}^{[r]}(x) = sum_k p_{n,k}^{[c]}(x)^r``.

Two routes are provided: a certified truncated series valid for every
``(n, c, r)`` and, for ``c = 1, r = 2``, the finite sum of odd powers of
``1/(1+2x)`` with exact rational coefficients.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .basis import K_CAP, BaskakovParams, log_weight_chunk
from .errors import DomainError, PoleError

__all__ = [
    "SeriesStatus",
    "SeriesEval",
    "ClosedFormC1R2",
    "power_sum_series",
    "alpha_power_sum",
    "alpha_alternating_sum",
    "coeff_cnj",
    "closed_form_c1_r2",
    "power_sum_closed_c1_r2",
    "power_sum_closed_c1_r2_complex",
    "szasz_sum",
    "scaled_i0",
]


class SeriesStatus(str, enum.Enum):
    CONVERGED = "Converged"
    TRUNCATION_CAP_HIT = "TruncationCapHit"


@dataclass(frozen=True)
class SeriesEval:
    value: float
    terms_used: int
    tail_bound: float
    status: SeriesStatus

    @property
    def converged(self) -> bool:
        return self.status is SeriesStatus.CONVERGED


@dataclass(frozen=True)
class _Truncation:
    """Log basis weights kept by the series, with the certified relative tail."""

    log_p: np.ndarray
    tail_rel: float
    status: SeriesStatus


_CHUNK = 512


def _truncate(
    log_chunk: Callable[[int, int], np.ndarray],
    sup_ratio: Callable[[np.ndarray], np.ndarray],
    r: int,
    rel_tol: float,
    cap: int = K_CAP,
) -> _Truncation:
    """Grow the index range chunk by chunk until the geometric tail is certified.

    ``log_chunk(k0, k1)`` returns ``log p_k`` for ``k0 <= k < k1``;
    ``sup_ratio(k)`` returns an upper bound on ``p_{j+1}/p_j`` for all ``j >= k``.
    """
    pieces = []
    ref = -math.inf  # running max of r*log p
    scaled_sum = 0.0  # sum of exp(r*log p - ref)
    k0 = 0
    while k0 <= cap:
        k1 = min(k0 + _CHUNK, cap + 1)
        logs = log_chunk(k0, k1)
        rl = r * logs
        new_ref = max(ref, float(rl.max()))
        if new_ref > ref:
            scaled_sum = scaled_sum * math.exp(ref - new_ref) if ref > -math.inf else 0.0
            ref = new_ref
        partial = scaled_sum + np.cumsum(np.exp(rl - ref))
        k = np.arange(k0, k1, dtype=float)
        rho = sup_ratio(k)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            rho_r = rho**r
            tail = np.where(rho < 1, np.exp(rl - ref) * rho_r / (1 - rho_r), np.inf)
        ok = np.nonzero(tail <= rel_tol * partial)[0]
        if ok.size:
            i = int(ok[0])
            pieces.append(logs[: i + 1])
            return _Truncation(np.concatenate(pieces), float(tail[i] / partial[i]), SeriesStatus.CONVERGED)
        pieces.append(logs)
        scaled_sum = float(partial[-1])
        last_tail = float(tail[-1] / partial[-1])
        k0 = k1
    return _Truncation(np.concatenate(pieces), last_tail, SeriesStatus.TRUNCATION_CAP_HIT)


def _alpha_truncation(alpha: float, y: float, r: int, rel_tol: float) -> _Truncation:
    """Truncation of ``sum_k p_k^r`` in the scaled variable ``y = c x > 0``."""
    q = y / (1.0 + y)
    state = {"poch": 0.0}

    def log_chunk(k0, k1):
        # Carry the Pochhammer cumulative sum across chunks.
        out, state["poch"] = log_weight_chunk(alpha, y, k0, k1, state["poch"])
        return out

    def sup_ratio(k):
        rho = (alpha + k) / (k + 1.0) * q
        # rho_k decreases in k when alpha >= 1 and increases towards q otherwise.
        return rho if alpha >= 1 else np.full_like(k, q)

    return _truncate(log_chunk, sup_ratio, r, rel_tol)


def _szasz_truncation(n: int, x: float, r: int, rel_tol: float) -> _Truncation:
    nx = n * x
    log_nx = math.log(nx)

    def log_chunk(k0, k1):
        k = np.arange(k0, k1, dtype=float)
        lgam = np.array([math.lgamma(v + 1.0) for v in k])
        return -nx + k * log_nx - lgam

    return _truncate(log_chunk, lambda k: nx / (k + 1.0), r, rel_tol)


def _finish(tr: _Truncation, r: int) -> SeriesEval:
    rl = r * tr.log_p
    top = float(rl.max())
    value = math.exp(top) * math.fsum(np.exp(rl - top))
    return SeriesEval(min(value, 1.0), len(rl), tr.tail_rel * value, tr.status)


def power_sum_series(params: BaskakovParams, x: float, rel_tol: float = 1e-14) -> SeriesEval:
    """Certified truncated sum ``sum_k p_{n,k}^{[c]}(x)^r``.

    Once the term ratio ``rho`` is below one on the whole remaining range, the
    tail is bounded by ``term * rho^r / (1 - rho^r)``.  If ``K_CAP`` terms do
    not certify the requested tolerance the status is ``TRUNCATION_CAP_HIT``.
    """
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    if not 0 < rel_tol < 1:
        raise DomainError("rel_tol must lie in (0, 1)")
    if x == 0:
        return SeriesEval(1.0, 1, 0.0, SeriesStatus.CONVERGED)
    if params.c == 0:
        tr = _szasz_truncation(params.n, x, params.r, rel_tol)
    else:
        tr = _alpha_truncation(params.alpha, params.c * x, params.r, rel_tol)
    return _finish(tr, params.r)


def alpha_power_sum(alpha: float, y: float, r: int = 2, rel_tol: float = 1e-14) -> SeriesEval:
    """``f_alpha^{[r]}(y) = (1+y)^(-r alpha) sum_k binom(-alpha,k)^r (y/(1+y))^(rk)`` for real ``alpha > 0``."""
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    if not y >= 0:
        raise DomainError(f"y must be non-negative, got {y!r}")
    if y == 0:
        return SeriesEval(1.0, 1, 0.0, SeriesStatus.CONVERGED)
    return _finish(_alpha_truncation(alpha, y, r, rel_tol), r)


def alpha_alternating_sum(alpha: float, y: float, r: int, rel_tol: float = 1e-14) -> float:
    """``sum_k (-1)^(rk) |binom(-alpha,k)|^r q^(rk) (1+y)^(-r alpha)``.

    Equals :func:`alpha_power_sum` for even ``r``; for odd ``r`` it is the
    signed sum that the multivariate Laplace-type integral reproduces.
    """
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    if not y >= 0:
        raise DomainError(f"y must be non-negative, got {y!r}")
    if y == 0:
        return 1.0
    tr = _alpha_truncation(alpha, y, r, rel_tol)
    sign = 1.0 if r % 2 == 0 else -1.0
    terms = sign ** np.arange(len(tr.log_p)) * np.exp(r * tr.log_p)
    return math.fsum(terms)


# -- closed form for c = 1, r = 2 -------------------------------------------


@dataclass(frozen=True)
class ClosedFormC1R2:
    """``psi_{n,1}(x) = sum_j c_{n,j} (1+2x)^(-2j-1)`` with exact coefficients."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x):
        return power_sum_closed_c1_r2(self.n, x)


@lru_cache(maxsize=512)
def _coeffs(n: int) -> tuple[Fraction, ...]:
    # c_{n,0} = binom(2n-2, n-1) / 4^(n-1); then the exact ratio recurrence.
    c = Fraction(math.comb(2 * n - 2, n - 1), 4 ** (n - 1))
    out = [c]
    for j in range(n - 1):
        c = c * Fraction((2 * j + 1) * (n - 1 - j), (2 * n - 2 * j - 3) * (j + 1))
        out.append(c)
    return tuple(out)


@lru_cache(maxsize=512)
def _float_coeffs(n: int) -> np.ndarray:
    a = np.array([float(c) for c in _coeffs(n)])
    a.setflags(write=False)
    return a


def _check_n(n: int) -> None:
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def coeff_cnj(n: int, j: int) -> Fraction:
    """Exact ``c_{n,j} = (2j)! (2n-2j-2)! / (2^(2n-2) (j! (n-1-j)!)^2)``."""
    _check_n(n)
    if int(j) != j or not 0 <= j <= n - 1:
        raise DomainError(f"j must lie in [0, {n - 1}], got {j!r}")
    return _coeffs(int(n))[int(j)]


def closed_form_c1_r2(n: int) -> ClosedFormC1R2:
    _check_n(n)
    return ClosedFormC1R2(int(n), _coeffs(int(n)))


def _horner_odd(n: int, s):
    w = 1.0 / (s * s)
    acc = 0.0
    for c in _float_coeffs(n)[::-1]:
        acc = acc * w + c
    return acc / s


def power_sum_closed_c1_r2(n: int, x: float) -> float:
    """Closed form of ``psi_{n,1}(x)``, Horner in ``w = (1+2x)^-2``."""
    _check_n(n)
    s = 1.0 + 2.0 * x
    if s == 0:
        raise PoleError("psi_{n,1} has a pole at x = -1/2")
    return float(_horner_odd(int(n), s))


def power_sum_closed_c1_r2_complex(n: int, x: complex) -> complex:
    """Same rational function at a complex argument (used for zero checks)."""
    _check_n(n)
    s = 1.0 + 2.0 * complex(x)
    if s == 0:
        raise PoleError("psi_{n,1} has a pole at x = -1/2")
    return complex(_horner_odd(int(n), s))


# -- Szasz limit ------------------------------------------------------------

_I0_SWITCH = 25.0


def scaled_i0(y: float) -> float:
    """``exp(-y) I_0(y)`` for ``y >= 0``.

    Power series below ``y = 25``, the large-argument asymptotic expansion
    above it (its smallest term there is far below double precision).
    """
    if y < 0:
        raise DomainError("scaled_i0 needs y >= 0")
    if y <= _I0_SWITCH:
        h2 = 0.25 * y * y
        t = math.exp(-y)
        terms = [t]
        k = 0
        while True:
            k += 1
            t *= h2 / (k * k)
            terms.append(t)
            if k > y and t < 1e-18 * terms[0] * math.exp(y):
                break
        return math.fsum(terms)
    terms = [1.0]
    a = 1.0
    k = 0
    while True:
        k += 1
        nxt = a * (2 * k - 1) ** 2 / (8.0 * y * k)
        if nxt >= a or nxt < 1e-18:
            break
        a = nxt
        terms.append(a)
    return math.fsum(terms) / math.sqrt(2.0 * math.pi * y)


def szasz_sum(n: int, x: float) -> float:
    """``psi_{n,0}(x) = exp(-2nx) I_0(2nx)``, the squared Szasz weights summed."""
    _check_n(n)
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    return scaled_i0(2.0 * n * x)
