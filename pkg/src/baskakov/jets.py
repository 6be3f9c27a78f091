"""Truncated power-series (Taylor-mode) arithmetic.

Series are numpy arrays whose last axis holds the normalized coefficients
``c_0 .. c_M`` of ``f(x0 + eps) = sum_m c_m eps^m``; leading axes broadcast,
so a whole family of jets can be propagated at once.  :class:`TaylorJet`
wraps a single series with its expansion point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "MAX_ORDER",
    "TaylorJet",
    "series_mul",
    "series_div",
    "series_exp",
    "series_log",
    "series_pow",
]

MAX_ORDER = 60


def series_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(a, b)
    m = a.shape[-1]
    out = np.zeros(a.shape, dtype=np.result_type(a, b))
    for i in range(m):
        out[..., i:] += a[..., i : i + 1] * b[..., : m - i]
    return out


def series_div(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.result_type(a, b, float))
    for m in range(a.shape[-1]):
        acc = a[..., m] - np.sum(out[..., :m] * b[..., m:0:-1], axis=-1) if m else a[..., 0]
        out[..., m] = acc / b[..., 0]
    return out


def series_exp(a: np.ndarray) -> np.ndarray:
    """``exp`` of a series: ``e_m = (1/m) sum_{j=1}^m j a_j e_{m-j}``."""
    a = np.asarray(a)
    out = np.zeros(a.shape, dtype=np.result_type(a, float))
    out[..., 0] = np.exp(a[..., 0])
    j = np.arange(a.shape[-1])
    for m in range(1, a.shape[-1]):
        out[..., m] = np.sum(j[1 : m + 1] * a[..., 1 : m + 1] * out[..., m - 1 :: -1][..., :m], axis=-1) / m
    return out


def series_log(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    out = np.zeros(a.shape, dtype=np.result_type(a, float))
    out[..., 0] = np.log(a[..., 0])
    j = np.arange(a.shape[-1])
    for m in range(1, a.shape[-1]):
        s = np.sum(j[1:m] * out[..., 1:m] * a[..., m - 1 : 0 : -1], axis=-1) if m > 1 else 0.0
        out[..., m] = (a[..., m] - s / m) / a[..., 0]
    return out


def series_pow(a: np.ndarray, p: float) -> np.ndarray:
    """``a**p`` for real ``p`` by the J.C.P. Miller recurrence (needs ``a_0 != 0``)."""
    a = np.asarray(a)
    out = np.zeros(a.shape, dtype=np.result_type(a, float))
    out[..., 0] = a[..., 0] ** p
    j = np.arange(a.shape[-1])
    for m in range(1, a.shape[-1]):
        w = p * j[1 : m + 1] - (m - j[1 : m + 1])
        out[..., m] = np.sum(w * a[..., 1 : m + 1] * out[..., m - 1 :: -1][..., :m], axis=-1) / (m * a[..., 0])
    return out


def _check_order(order: int) -> None:
    if int(order) != order or not 0 <= order <= MAX_ORDER:
        raise DomainError(f"jet order must lie in [0, {MAX_ORDER}], got {order!r}")


@dataclass(frozen=True, eq=False)
class TaylorJet:
    """Normalized Taylor coefficients of a function at ``center``.

    ``scale`` optionally carries, per coefficient, the absolute size of the
    quantities that were summed to produce it; it sets the roundoff budget
    used by sign checks.
    """

    center: float
    coeffs: np.ndarray
    scale: np.ndarray | None = field(default=None)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        object.__setattr__(self, "coeffs", c)
        _check_order(len(c) - 1)
        if self.scale is not None:
            object.__setattr__(self, "scale", np.asarray(self.scale, dtype=float))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def variable(cls, x0: float, order: int) -> "TaylorJet":
        c = np.zeros(order + 1)
        c[0] = x0
        if order:
            c[1] = 1.0
        return cls(x0, c)

    @classmethod
    def constant(cls, value: float, x0: float, order: int) -> "TaylorJet":
        c = np.zeros(order + 1)
        c[0] = value
        return cls(x0, c)

    def derivative(self, m: int) -> float:
        return math.factorial(m) * float(self.coeffs[m])

    def derivatives(self) -> np.ndarray:
        fact = np.array([math.factorial(m) for m in range(self.order + 1)], dtype=float)
        return fact * self.coeffs

    def derivative_scales(self) -> np.ndarray:
        base = np.abs(self.coeffs) if self.scale is None else np.maximum(self.scale, np.abs(self.coeffs))
        fact = np.array([math.factorial(m) for m in range(self.order + 1)], dtype=float)
        return fact * base

    def _wrap(self, coeffs) -> "TaylorJet":
        return TaylorJet(self.center, coeffs)

    def _other(self, other) -> np.ndarray:
        if isinstance(other, TaylorJet):
            if other.order != self.order:
                raise DomainError("jets of different order")
            return other.coeffs
        c = np.zeros(self.order + 1)
        c[0] = other
        return c

    def __add__(self, other):
        return self._wrap(self.coeffs + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.coeffs - self._other(other))

    def __rsub__(self, other):
        return self._wrap(self._other(other) - self.coeffs)

    def __neg__(self):
        return self._wrap(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TaylorJet):
            return self._wrap(series_mul(self.coeffs, other.coeffs))
        return self._wrap(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorJet):
            return self._wrap(series_div(self.coeffs, other.coeffs))
        return self._wrap(self.coeffs / other)

    def __rtruediv__(self, other):
        return self._wrap(series_div(self._other(other), self.coeffs))

    def __pow__(self, p: float):
        return self._wrap(series_pow(self.coeffs, p))

    def exp(self) -> "TaylorJet":
        return self._wrap(series_exp(self.coeffs))

    def log(self) -> "TaylorJet":
        return self._wrap(series_log(self.coeffs))

    def sqrt(self) -> "TaylorJet":
        return self ** 0.5
