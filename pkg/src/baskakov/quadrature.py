"""Quadrature checks of the Laplace-type and Fourier integral representations.

Radial variables use generalized Gauss-Laguerre rules for the weight
``t^(alpha-1) exp(-t)`` (nodes from the Golub-Welsch eigenproblem); angular
variables use equally spaced rules, which are spectrally accurate for the
analytic periodic integrands involved.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CostCapError, DomainError

__all__ = [
    "QuadratureSpec",
    "MultiLaplaceResult",
    "gauss_laguerre",
    "laplace_triple",
    "parseval_integral",
    "szasz_integral",
    "laplace_multi",
    "laplace_multi_detailed",
    "MAX_EVALUATIONS",
]

MAX_EVALUATIONS = 10**9


@dataclass(frozen=True)
class QuadratureSpec:
    radial_nodes: int = 64
    angular_nodes: int = 256
    alpha: float | None = None

    def __post_init__(self):
        if not 4 <= self.radial_nodes <= 256:
            raise DomainError(f"radial_nodes must lie in [4, 256], got {self.radial_nodes}")
        if not 8 <= self.angular_nodes <= 4096:
            raise DomainError(f"angular_nodes must lie in [8, 4096], got {self.angular_nodes}")
        if self.alpha is not None and not self.alpha > 0:
            raise DomainError("alpha must be positive")


@lru_cache(maxsize=64)
def _gauss_laguerre(nodes: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    a = alpha - 1.0
    i = np.arange(nodes, dtype=float)
    jacobi = np.diag(2.0 * i + a + 1.0)
    off = np.sqrt(i[1:] * (i[1:] + a))
    jacobi += np.diag(off, 1) + np.diag(off, -1)
    t, vecs = np.linalg.eigh(jacobi)
    # Weights normalized by the total mass Gamma(alpha) of the weight function.
    w = vecs[0, :] ** 2
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def gauss_laguerre(nodes: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and probability-normalized weights for ``t^(alpha-1) e^-t / Gamma(alpha)``."""
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    if nodes < 1:
        raise DomainError("nodes must be positive")
    return _gauss_laguerre(int(nodes), float(alpha))


def _resolve(alpha: float, x: float, spec: QuadratureSpec) -> None:
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    if spec.alpha is not None and spec.alpha != alpha:
        raise DomainError(f"spec.alpha={spec.alpha} conflicts with alpha={alpha}")


def laplace_triple(alpha: float, x: float, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Triple-integral value of ``f_alpha(x)``.

    Discretizes ``(1/(pi Gamma(alpha)^2)) int int int exp(-(s+t+2 sqrt(st) cos th) x)
    exp(-(s+t)) (st)^(alpha-1) ds dt dth`` with Gauss-Laguerre in ``s, t`` and
    the midpoint rule in ``th`` on ``(0, pi)``.
    """
    _resolve(alpha, x, spec)
    s, w = gauss_laguerre(spec.radial_nodes, alpha)
    m = spec.angular_nodes
    cos_th = np.cos((np.arange(m) + 0.5) * math.pi / m)
    root = np.sqrt(np.outer(s, s))
    total = np.add.outer(s, s)
    # Angular mean for every (s, t) pair, then the tensor Gauss-Laguerre sum.
    expo = -x * (total[:, :, None] + 2.0 * root[:, :, None] * cos_th[None, None, :])
    ang = np.exp(expo).mean(axis=2)
    return float(w @ ang @ w)


def parseval_integral(n: int, x: float, angular_nodes: int = 512, c: float = 1.0) -> float:
    """``(1/2pi) int_{-pi}^{pi} (1 + 2cx(1+cx)(1 - cos t))^(-n/c) dt`` by the periodic trapezoid rule.

    For ``c = 1`` this is ``psi_{n,1}(x)``; for other ``c > 0`` the same Fourier
    argument gives ``psi_{n,c}(x)``.  The integrand is even, so the
    ``angular_nodes`` points are spread over ``[0, pi]`` (end points with half
    weight), which is the ``2(angular_nodes - 1)``-point rule on the full period.
    """
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    if not c > 0:
        raise DomainError("parseval_integral needs c > 0")
    if angular_nodes < 2:
        raise DomainError("angular_nodes must be at least 2")
    m = angular_nodes - 1
    t = math.pi * np.arange(angular_nodes) / m
    y = c * x
    # 1 - cos t = 2 sin^2(t/2) avoids cancellation near t = 0.
    base = 1.0 + 4.0 * y * (1.0 + y) * np.sin(0.5 * t) ** 2
    vals = np.exp(-(n / c) * np.log(base))
    vals[0] *= 0.5
    vals[-1] *= 0.5
    return math.fsum(vals) / m


def szasz_integral(n: int, x: float, nodes: int = 256) -> float:
    """``(2/pi) int_0^{pi/2} exp(-4nx sin^2 t) dt`` by the midpoint rule."""
    if not x >= 0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    t = (np.arange(nodes) + 0.5) * (0.5 * math.pi / nodes)
    return math.fsum(np.exp(-4.0 * n * x * np.sin(t) ** 2)) / nodes


@dataclass(frozen=True)
class MultiLaplaceResult:
    value: float
    imag: float
    min_re_g: float
    evaluations: int


def _radial_tuples(nodes: np.ndarray, weights: np.ndarray, r: int):
    """Unordered radial node tuples with multinomial multiplicity.

    The integrand depends on the radial variables only through their sum and
    product, so permutations of a tuple contribute identically.
    """
    idx = np.array(list(itertools.combinations_with_replacement(range(len(nodes)), r)), dtype=np.intp)
    counts = np.array([math.factorial(r) / math.prod(math.factorial(v) for v in np.unique(row, return_counts=True)[1])
                       for row in idx])
    t = nodes[idx]
    w = np.prod(weights[idx], axis=1) * counts
    return t.sum(axis=1), np.prod(t, axis=1), w


def _min_re_angular(r: int, m: int) -> float:
    """Minimum over the angular grid of ``Re(sum_j e^{i phi_j} + e^{-i sum phi_j})``."""
    phi = 2.0 * math.pi * np.arange(m) / m
    cos = np.cos(phi)
    if r == 2:
        return float(np.min(2.0 * cos))
    best = math.inf
    # Chunk over the first angle to bound memory.
    for i in range(m):
        rest = np.meshgrid(*([phi] * (r - 2)), indexing="ij", sparse=True)
        tot = phi[i] + sum(rest)
        val = cos[i] + sum(np.cos(p) for p in rest) + np.cos(tot)
        best = min(best, float(np.min(val)))
    return best


def laplace_multi_detailed(alpha: float, r: int, x: float, spec: QuadratureSpec) -> MultiLaplaceResult:
    """Multivariate Laplace-type value of ``f_alpha^{[r]}(x)`` with diagnostics.

    The angular tensor sum over ``(r-1)`` equally spaced angles is evaluated as
    a cyclic convolution (FFT), which reproduces the full tensor-product sum
    exactly in exact arithmetic.  ``min_re_g`` is the smallest real part of
    the exponent ``g(t, phi)`` over every quadrature node.
    """
    _resolve(alpha, x, spec)
    if int(r) != r or not 2 <= r <= 4:
        raise DomainError(f"r must be an integer in [2, 4], got {r!r}")
    nr, m = spec.radial_nodes, spec.angular_nodes
    evaluations = nr**r * m ** (r - 1)
    if evaluations > MAX_EVALUATIONS:
        raise CostCapError(f"{evaluations} integrand evaluations exceed the cap {MAX_EVALUATIONS}")
    t, w = gauss_laguerre(nr, alpha)
    tsum, tprod, wt = _radial_tuples(t, w, r)
    geo = tprod ** (1.0 / r)
    min_re_s = _min_re_angular(r, m)
    min_re_g = float(np.min(tsum + geo * min_re_s))

    omega = np.exp(2j * math.pi * np.arange(m) / m)
    total = 0j
    chunk = max(1, 2**22 // m)
    for lo in range(0, len(tsum), chunk):
        sl = slice(lo, lo + chunk)
        y = (x * geo[sl])[:, None]
        share = (x * tsum[sl] / r)[:, None]
        # Each of the r exponential factors carries 1/r of exp(-x sum t).
        a = np.exp(-y * omega[None, :] - share)
        b = np.exp(-y * np.conj(omega)[None, :] - share)
        conv = np.fft.ifft(np.fft.fft(a, axis=1) ** (r - 1), axis=1)
        ang = np.sum(conv * b, axis=1) / m ** (r - 1)
        total += np.sum(wt[sl] * ang)
    return MultiLaplaceResult(float(total.real), float(total.imag), min_re_g, evaluations)


def laplace_multi(alpha: float, r: int, x: float, spec: QuadratureSpec) -> float:
    """Real part of the multivariate Laplace-type quadrature for ``f_alpha^{[r]}(x)``."""
    return laplace_multi_detailed(alpha, r, x, spec).value
