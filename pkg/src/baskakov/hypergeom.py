"""Gauss hypergeometric series, the polynomials P_n and the elliptic integral K."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NonConvergenceError

__all__ = [
    "RealPolynomial",
    "gauss_2f1",
    "pn_polynomial",
    "binom_half",
    "elliptic_K_agm",
    "elliptic_cm_profile",
]

_MAX_TERMS = 50_000


@dataclass(frozen=True)
class RealPolynomial:
    """Polynomial with exact rational coefficients in ascending degree."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        if self.coeffs[-1] == 0 and len(self.coeffs) > 1:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __call__(self, z):
        """Horner evaluation; exact for Fraction input, floating otherwise."""
        if isinstance(z, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return acc
        acc = 0.0
        for c in reversed(self.float_coeffs()):
            acc = acc * z + c
        return acc


def _nonpositive_int(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def gauss_2f1(a: float, b: float, c: float, z: float, rel_tol: float = 1e-15) -> float:
    """``2F1(a, b; c; z)`` by its defining series for ``|z| < 1``.

    The series terminates when ``a`` or ``b`` is a non-positive integer, in
    which case any real ``z`` is accepted.  Terms are accumulated with
    ``math.fsum``; an error is raised after 50000 terms.
    """
    terminating = _nonpositive_int(a) or _nonpositive_int(b)
    last = None
    if terminating:
        last = int(-max(v for v in (a, b) if _nonpositive_int(v)))
    if _nonpositive_int(c) and (last is None or last > -c):
        raise DomainError(f"c = {c} is a non-positive integer reached before termination")
    if not terminating and not abs(z) < 1:
        raise DomainError("non-terminating 2F1 series needs |z| < 1")
    if z == 0:
        return 1.0
    t = 1.0
    terms = [t]
    running = 1.0  # plain sum, only used for the stopping test
    k = 0
    while k < _MAX_TERMS:
        if last is not None and k == last:
            return math.fsum(terms)
        t *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        k += 1
        terms.append(t)
        running += t
        if last is None and abs(t) <= rel_tol * abs(running):
            # The term ratio tends to z; bound the tail geometrically once it is below one.
            ratio = abs((a + k) * (b + k) / ((c + k) * (k + 1)) * z)
            if ratio < 1 and abs(t) * ratio / (1 - ratio) <= rel_tol * abs(running):
                return math.fsum(terms)
    raise NonConvergenceError(f"2F1({a}, {b}; {c}; {z}) did not converge in {_MAX_TERMS} terms")


@lru_cache(maxsize=256)
def _pn_coeffs(n: int) -> tuple[Fraction, ...]:
    half = Fraction(1, 2)
    c = Fraction(1)
    out = [c]
    for j in range(n):
        c = c * (-n + j) * (half + j) / ((-n + half + j) * (j + 1))
        out.append(c)
    return tuple(out)


def pn_polynomial(n: int) -> RealPolynomial:
    """``P_n(z) = 2F1(-n, 1/2; -n + 1/2; z)`` with exact coefficients."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return RealPolynomial(_pn_coeffs(int(n)))


def binom_half(n: int) -> Fraction:
    """``binom(n - 3/2, n - 1)`` as an exact rational."""
    top = Fraction(2 * n - 3, 2)
    out = Fraction(1)
    for i in range(n - 1):
        out = out * (top - i) / (i + 1)
    return out


def _agm(a: float, b: float, tol: float = 1e-16) -> float:
    for _ in range(64):
        if abs(a - b) <= tol * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_K_agm(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus ``k`` in ``[0, 1)``."""
    if not 0 <= k < 1:
        raise DomainError(f"K(k) needs 0 <= k < 1, got {k!r}")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * _agm(1.0, kp))


def elliptic_cm_profile(x: float) -> float:
    """``K(x / (1 + x)) / (1 + x)`` for ``x >= 0``."""
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    return elliptic_K_agm(x / (1.0 + x)) / (1.0 + x)
