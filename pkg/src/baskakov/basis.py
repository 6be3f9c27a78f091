"""Generalized Baskakov basis functions evaluated in log space.

For ``c > 0`` the basis is

    p_{n,k}^{[c]}(x) = binom(-n/c, k) (-c x)^k (1 + c x)^(-n/c - k)

and for ``c = 0`` it degenerates to the Szasz-Mirakjan weights
``exp(-n x) (n x)^k / k!``.  Every value is assembled as a logarithm and
exponentiated once, so ``k`` in the thousands is harmless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "BaskakovParams",
    "LogSignedValue",
    "K_CAP",
    "pochhammer",
    "binom_neg",
    "basis_value",
    "basis_log_value",
    "szasz_basis_value",
    "log_weights",
]

#: Hard ceiling on the summation index of any basis series.
K_CAP = 100_000

_LOG_MAX = math.log(np.finfo(float).max)
# Beyond this many factors the direct log1p sum is replaced by lgamma.
_DIRECT_SUM_LIMIT = 4096


@dataclass(frozen=True)
class BaskakovParams:
    """The triple ``(n, c, r)``; ``c == 0`` selects the Szasz limit."""

    n: int
    c: float
    r: int = 2

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if not (self.c >= 0 and math.isfinite(self.c)):
            raise DomainError(f"c must be a finite non-negative real, got {self.c!r}")
        if int(self.r) != self.r or self.r < 1:
            raise DomainError(f"r must be an integer >= 1, got {self.r!r}")

    @property
    def alpha(self) -> float:
        """``n / c``; infinite in the Szasz limit."""
        return math.inf if self.c == 0 else self.n / self.c


@dataclass(frozen=True)
class LogSignedValue:
    """A real number stored as ``sign * exp(log_magnitude)``.

    Zero is ``sign == 0`` with ``log_magnitude == -inf``.  Converting to a
    float never overflows silently: :meth:`to_float` raises
    ``OverflowError`` when the magnitude exceeds the largest double.
    Underflow to ``0.0`` is allowed.
    """

    log_magnitude: float
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if (self.sign == 0) != (self.log_magnitude == -math.inf):
            raise ValueError("sign 0 must pair with log_magnitude -inf")

    @classmethod
    def from_float(cls, v: float) -> "LogSignedValue":
        if v == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(v)), 1 if v > 0 else -1)

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.log_magnitude > _LOG_MAX:
            raise OverflowError(f"exp({self.log_magnitude}) exceeds the double range")
        return self.sign * math.exp(self.log_magnitude)

    def __float__(self) -> float:
        return self.to_float()

    def __mul__(self, other: "LogSignedValue") -> "LogSignedValue":
        if self.sign == 0 or other.sign == 0:
            return LogSignedValue(-math.inf, 0)
        return LogSignedValue(self.log_magnitude + other.log_magnitude, self.sign * other.sign)

    def __truediv__(self, other: "LogSignedValue") -> "LogSignedValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero LogSignedValue")
        if self.sign == 0:
            return self
        return LogSignedValue(self.log_magnitude - other.log_magnitude, self.sign * other.sign)


def _log_poch_over_factorial(alpha: float, k: int) -> float:
    """``log((alpha)_k / k!)`` as a sum of small logarithms."""
    if k == 0:
        return 0.0
    if k > _DIRECT_SUM_LIMIT:
        return math.lgamma(alpha + k) - math.lgamma(alpha) - math.lgamma(k + 1)
    a1 = alpha - 1.0
    return math.fsum(math.log1p(a1 / i) for i in range(1, k + 1))


def _check_alpha_k(alpha: float, k: int) -> None:
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if int(k) != k or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")


def pochhammer(alpha: float, k: int) -> LogSignedValue:
    """Rising factorial ``(alpha)_k`` for ``alpha > 0``."""
    _check_alpha_k(alpha, k)
    if k == 0:
        return LogSignedValue(0.0, 1)
    if k <= _DIRECT_SUM_LIMIT:
        return LogSignedValue(math.fsum(math.log(alpha + i) for i in range(k)), 1)
    return LogSignedValue(math.lgamma(alpha + k) - math.lgamma(alpha), 1)


def binom_neg(alpha: float, k: int) -> LogSignedValue:
    """``binom(-alpha, k) = (-1)^k (alpha)_k / k!``."""
    _check_alpha_k(alpha, k)
    return LogSignedValue(_log_poch_over_factorial(alpha, int(k)), -1 if k % 2 else 1)


def basis_log_value(params: BaskakovParams, k: int, x: float) -> LogSignedValue:
    """Log-space ``p_{n,k}^{[c]}(x)`` (sign is 0 or +1)."""
    if params.c <= 0:
        raise DomainError("basis_value needs c > 0; use szasz_basis_value for c = 0")
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    if int(k) != k or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    if x == 0:
        return LogSignedValue(0.0, 1) if k == 0 else LogSignedValue(-math.inf, 0)
    c, alpha = params.c, params.alpha
    cx = c * x
    # binom(-a,k)(-cx)^k is positive: the two signs cancel.
    log_p = _log_poch_over_factorial(alpha, int(k)) + k * math.log(cx) - (alpha + k) * math.log1p(cx)
    return LogSignedValue(log_p, 1)


def basis_value(params: BaskakovParams, k: int, x: float) -> float:
    """``p_{n,k}^{[c]}(x)`` for ``c > 0`` and ``x >= 0``; always in ``[0, 1]``."""
    return min(1.0, basis_log_value(params, k, x).to_float())


def szasz_basis_value(n: int, k: int, x: float) -> float:
    """Szasz-Mirakjan weight ``exp(-n x) (n x)^k / k!``."""
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    if int(k) != k or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    if x == 0:
        return 1.0 if k == 0 else 0.0
    nx = n * x
    return min(1.0, math.exp(-nx + k * math.log(nx) - math.lgamma(k + 1)))


def log_weight_chunk(alpha: float, y: float, k0: int, k1: int, poch0=0.0) -> tuple[np.ndarray, np.longdouble]:
    """``log p_k`` for ``k0 <= k < k1`` given ``poch0 = log((alpha)_{k0-1}/(k0-1)!)``.

    Returns the values and the running Pochhammer log for the next chunk.
    The cumulative sum and the two large products are carried in extended
    precision (where the platform has it), since their magnitudes reach the
    hundreds while the result near the mode is O(1).
    """
    ld = np.longdouble
    k = np.arange(k0, k1, dtype=ld)
    steps = np.log1p((ld(alpha) - 1) / np.maximum(k, ld(1)))
    if k0 == 0:
        steps[0] = 0
    poch = ld(poch0) + np.cumsum(steps)
    yl = ld(y)
    log_q = np.log(yl) - np.log1p(yl)
    out = poch + k * log_q - ld(alpha) * np.log1p(yl)
    return out.astype(float), poch[-1]


def log_weights(alpha: float, y: float, kmax: int) -> np.ndarray:
    """Vector of ``log p_k`` for ``k = 0..kmax`` in the scaled variable ``y = c x``.

    Uses the alpha-form ``p_k = (alpha)_k/k! * q^k * (1+y)^(-alpha)`` with
    ``q = y/(1+y)``; ``y`` must be positive.  The Pochhammer ratio is a
    cumulative sum of ``log1p((alpha-1)/i)`` which stays accurate for large k.
    """
    return log_weight_chunk(alpha, y, 0, kmax + 1)[0]
