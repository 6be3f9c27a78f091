import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from baskakov import (
    DomainError,
    RealPolynomial,
    ZeroSet,
    closed_form_c1_r2,
    find_roots,
    measure_stats,
    pn_polynomial,
    power_sum_closed_c1_r2_complex,
    psi_measure_stats,
    psi_zeros,
)

# Frozen from a 60-digit mpmath.polyroots run on P_n (empirical regression
# values, not closed-form results).  All oracle roots satisfy |z| = 1 exactly.
ORACLE = {
    10: {"ks": 0.07287523370842464, "pot2": 0.03775578211252423},
    20: {"ks": 0.03733677170779126, "pot2": 0.018009907020787246},
    40: {"ks": 0.018900254373149274, "pot2": 0.008826942521954206},
    80: {"ks": 0.0095090040688387, "pot2": 0.004371993668074313},
}


def test_linear_and_quadratic():
    zs = find_roots(pn_polynomial(1))
    assert zs.converged and zs.roots[0] == pytest.approx(-1.0)
    zs = find_roots(pn_polynomial(2))
    ref = np.array([complex(-1 / 3, -2 * math.sqrt(2) / 3), complex(-1 / 3, 2 * math.sqrt(2) / 3)])
    assert np.allclose(zs.roots, ref, atol=1e-15)
    assert np.all(np.abs(np.abs(zs.roots) - 1) <= 1e-14)


def test_degree_zero_rejected():
    with pytest.raises(DomainError):
        find_roots([1.0])
    with pytest.raises(DomainError):
        find_roots([1.0, 0.0])


@pytest.mark.parametrize("n", [3, 7, 12, 20])
def test_matches_companion_eigenvalues(n):
    coeffs = pn_polynomial(n).float_coeffs()
    ref = np.roots(coeffs[::-1])
    zs = find_roots(pn_polynomial(n))
    for z in ref:
        assert np.min(np.abs(zs.roots - z)) < 1e-12


@given(st.lists(st.floats(-3, 3), min_size=3, max_size=15), st.floats(0.5, 2))
def test_random_polynomials_deterministic(coeffs, lead):
    poly = coeffs + [lead]
    a, b = find_roots(poly), find_roots(poly)
    assert np.array_equal(a.roots, b.roots) and a.iterations == b.iterations
    assert len(a) == len(poly) - 1
    if a.converged:
        assert np.all(a.residuals <= 1e-10 * np.sum(np.abs(poly)))


@pytest.mark.parametrize("n", [5, 25, 60, 100])
def test_residuals_and_conjugate_symmetry(n):
    zs = find_roots(pn_polynomial(n))
    assert zs.converged and len(zs) == n
    assert np.all(zs.residuals <= 1e-10 * np.sum(np.abs(pn_polynomial(n).float_coeffs())))
    for z in zs.roots:
        assert np.min(np.abs(zs.roots - np.conj(z))) <= 1e-12


def test_psi_zeros_n2():
    xs = psi_zeros(2)
    assert len(xs) == 2
    assert np.allclose(np.sort_complex(xs.roots), [complex(-0.5, -0.5), complex(-0.5, 0.5)], atol=1e-12)
    assert np.allclose(np.abs(xs.roots + 0.5), 0.5, atol=1e-15)
    # zeros of 2x^2 + 2x + 1
    assert np.allclose(2 * xs.roots**2 + 2 * xs.roots + 1, 0, atol=1e-15)


@pytest.mark.parametrize("n", [2, 5, 13, 30])
def test_psi_zeros_count_and_nonreal(n):
    xs = psi_zeros(n)
    assert xs.converged and len(xs) == 2 * (n - 1)
    assert np.all(np.abs(xs.roots.imag) > 0)


@pytest.mark.parametrize("n", [3, 10, 25, 60])
def test_psi_zeros_are_zeros_of_closed_form(n):
    coeffs = [float(c) for c in closed_form_c1_r2(n).coeffs]
    for x in psi_zeros(n).roots:
        s = abs(1 + 2 * x)
        local = math.fsum(c * s ** (-2 * j - 1) for j, c in enumerate(coeffs))
        assert abs(power_sum_closed_c1_r2_complex(n, x)) <= 1e-8 * local


def test_psi_zero_requires_n2():
    with pytest.raises(DomainError):
        psi_zeros(1)


def test_measure_stats_examples():
    st2 = measure_stats(find_roots(pn_polynomial(2)))
    assert st2.radial_dev_max <= 1e-15
    st1 = measure_stats(find_roots(pn_polynomial(1)), test_radii=[2.0])
    z2 = [e for z, e in st1.potential_errors if abs(z - 2) < 1e-12]
    assert z2[0] == pytest.approx(math.log(1.5), rel=1e-14)


@pytest.mark.parametrize("n", [4, 9, 32])
def test_measure_stats_roots_of_unity(n):
    roots = np.exp(2j * math.pi * np.arange(n) / n)
    zs = ZeroSet(roots, np.zeros(n), 0, True)
    s = measure_stats(zs)
    assert s.radial_dev_max <= 1e-15
    assert s.angular_ks <= 1.0 / n + 1e-12
    assert 0 <= s.angular_ks <= 1
    # the error at |z| = 2 is |log|1 - z^-n|| / n, largest where z^n > 0
    assert s.potential_error_max(2.0) == pytest.approx(-math.log(1 - 2.0**-n) / n, rel=1e-10)


def test_measure_requires_converged():
    with pytest.raises(DomainError):
        measure_stats(ZeroSet(np.array([1j]), np.zeros(1), 500, False))
    with pytest.raises(DomainError):
        measure_stats(find_roots(pn_polynomial(3)), test_radii=[0.5])


def test_psi_measure_stats_n2():
    s = psi_measure_stats(psi_zeros(2))
    assert s.radial_dev_max <= 1e-15
    assert s.angular_ks == pytest.approx(0.25, abs=1e-15)


def test_equilibrium_regression_values():
    prev = None
    for n, ref in ORACLE.items():
        s = measure_stats(find_roots(pn_polynomial(n)))
        assert s.radial_dev_max <= 1e-14
        assert s.angular_ks == pytest.approx(ref["ks"], abs=1e-12)
        assert s.potential_error_max(2.0) == pytest.approx(ref["pot2"], abs=1e-12)
        if prev is not None:
            assert s.potential_error_max(2.0) <= prev.potential_error_max(2.0)
            assert s.angular_ks <= prev.angular_ks
        prev = s


def test_psi_radial_trend():
    a = psi_measure_stats(psi_zeros(25))
    b = psi_measure_stats(psi_zeros(100))
    # zeros of psi sit on |2x+1| = 1 up to roundoff, as those of P_{n-1} do
    assert a.radial_dev_max <= 1e-14 and b.radial_dev_max <= 1e-14
    assert b.angular_ks < a.angular_ks


def test_real_polynomial_input():
    from fractions import Fraction
    zs = find_roots(RealPolynomial((Fraction(2), Fraction(-3), Fraction(1))))
    assert np.allclose(np.sort(zs.roots.real), [1.0, 2.0])
    assert np.allclose(find_roots([2.0, -3.0, 1.0]).roots, zs.roots)
