"""Zeros of ``P_n`` and of ``psi_{n,1}`` and their equilibrium-measure diagnostics."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .hypergeom import RealPolynomial, pn_polynomial
from .powersum import _float_coeffs

__all__ = [
    "ZeroSet",
    "MeasureStats",
    "PHASE_OFFSET",
    "find_roots",
    "psi_zeros",
    "psi_numerator",
    "measure_stats",
    "psi_measure_stats",
]

PHASE_OFFSET = 0.3799
MAX_SWEEPS = 500


@dataclass
class ZeroSet:
    roots: np.ndarray  # complex
    residuals: np.ndarray
    iterations: int
    converged: bool

    def __len__(self) -> int:
        return len(self.roots)


@dataclass
class MeasureStats:
    radial_dev_max: float
    radial_dev_mean: float
    angular_ks: float
    potential_errors: list[tuple[complex, float]]

    def potential_error_max(self, radius: float | None = None) -> float:
        errs = [e for z, e in self.potential_errors if radius is None or math.isclose(abs(z), radius)]
        return max(errs)


def _horner(coeffs: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Value and derivative of ``sum a_j z^j`` (ascending coefficients)."""
    p = np.full(z.shape, coeffs[-1], dtype=complex)
    dp = np.zeros(z.shape, dtype=complex)
    for a in coeffs[-2::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _sort_roots(z: np.ndarray) -> np.ndarray:
    return z[np.lexsort((z.imag, z.real))]


def find_roots(poly: RealPolynomial | Sequence[float], residual_tol: float = 1e-10) -> ZeroSet:
    """All complex roots by Aberth-Ehrlich simultaneous iteration.

    Starts from equally spaced points on the circle of radius
    ``sqrt(1 + max|a_j / a_deg|)`` rotated by a fixed phase, so the result is
    deterministic.  Sweeps update every root from the previous iterate
    (Jacobi style).  A root is accepted when ``|P(z)| <= residual_tol *
    sum|a_j|``; after 500 sweeps the best iterate is returned with
    ``converged = False``.
    """
    coeffs = np.asarray(poly.float_coeffs() if isinstance(poly, RealPolynomial) else poly, dtype=float)
    deg = len(coeffs) - 1
    if deg < 1:
        raise DomainError("find_roots needs degree >= 1")
    if coeffs[-1] == 0:
        raise DomainError("leading coefficient must be nonzero")
    scaled = coeffs / np.max(np.abs(coeffs))
    if deg == 1:
        root = np.array([-scaled[0] / scaled[1]], dtype=complex)
        res = np.abs(_horner(coeffs, root)[0])
        return ZeroSet(root, res, 0, bool(res[0] <= residual_tol * np.sum(np.abs(coeffs))))

    radius = math.sqrt(1.0 + float(np.max(np.abs(scaled[:-1] / scaled[-1]))))
    z = radius * np.exp(1j * (2.0 * math.pi * np.arange(deg) / deg + PHASE_OFFSET))
    eps = np.finfo(float).eps
    sweeps = 0
    for sweeps in range(1, MAX_SWEEPS + 1):
        p, dp = _horner(scaled, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        newton = p / dp
        step = newton / (1.0 - newton * inv.sum(axis=1))
        z = z - step
        if np.all(np.abs(step) <= 4 * eps * np.maximum(np.abs(z), 1.0)):
            break
    z = _sort_roots(z)
    res = np.abs(_horner(coeffs, z)[0])
    ok = bool(np.all(res <= residual_tol * np.sum(np.abs(coeffs))))
    return ZeroSet(z, res, sweeps, ok and sweeps < MAX_SWEEPS or ok)


def psi_numerator(n: int) -> np.ndarray:
    """Ascending coefficients in ``s = 1 + 2x`` of ``s^(2n-1) psi_{n,1}``."""
    c = _float_coeffs(int(n))
    out = np.zeros(2 * n - 1)
    for j, cj in enumerate(c):
        out[2 * (n - 1 - j)] = cj
    return out


def psi_zeros(n: int, residual_tol: float = 1e-10) -> ZeroSet:
    """The ``2(n-1)`` complex zeros of ``psi_{n,1}`` in the x-plane.

    Each root ``z`` of ``P_{n-1}`` yields both square roots ``w`` of ``1/z``
    and the zeros ``x = (w - 1)/2``.  Residuals are those of the numerator
    polynomial in ``s = 1 + 2x``.
    """
    if int(n) != n or n < 2:
        raise DomainError(f"psi_zeros needs an integer n >= 2, got {n!r}")
    zs = find_roots(pn_polynomial(n - 1), residual_tol)
    w = np.sqrt(1.0 / zs.roots.astype(complex))
    x = np.concatenate([(w - 1.0) / 2.0, (-w - 1.0) / 2.0])
    x = _sort_roots(x)
    num = psi_numerator(n)
    res = np.abs(_horner(num, 1.0 + 2.0 * x)[0])
    ok = zs.converged and bool(np.all(res <= residual_tol * np.sum(num) * np.maximum(1.0, np.abs(1.0 + 2.0 * x)) ** (2 * n - 2)))
    return ZeroSet(x, res, zs.iterations, ok)


def _ks_uniform(u: np.ndarray) -> float:
    u = np.sort(u)
    n = len(u)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - u), np.max(u - (i - 1) / n)))


def _stats(points: np.ndarray, test_radii: Sequence[float]) -> MeasureStats:
    if len(points) == 0:
        raise DomainError("empty zero set")
    dev = np.abs(np.abs(points) - 1.0)
    u = np.mod(np.angle(points) / (2.0 * math.pi), 1.0)
    errors = []
    n = len(points)
    for rad in test_radii:
        if not rad > 1:
            raise DomainError("test radii must exceed 1")
        for j in range(8):
            t = rad * cmath.exp(2j * math.pi * j / 8)
            pot = -math.fsum(np.log(np.abs(t - points))) / n
            errors.append((t, abs(pot - math.log(1.0 / rad))))
    return MeasureStats(float(dev.max()), float(dev.mean()), _ks_uniform(u), errors)


def measure_stats(zs: ZeroSet, test_radii: Sequence[float] = (2.0,)) -> MeasureStats:
    """Distance of the zero counting measure from the uniform measure on ``|z| = 1``."""
    if not zs.converged:
        raise DomainError("measure_stats needs a converged zero set")
    return _stats(np.asarray(zs.roots, dtype=complex), test_radii)


def psi_measure_stats(xs: ZeroSet, test_radii: Sequence[float] = (2.0,)) -> MeasureStats:
    """Same diagnostics for ``psi_{n,1}`` zeros after the map ``z = 1 + 2x``."""
    if not xs.converged:
        raise DomainError("psi_measure_stats needs a converged zero set")
    return _stats(1.0 + 2.0 * np.asarray(xs.roots, dtype=complex), test_radii)
