import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from baskakov import (
    BaskakovParams,
    DomainError,
    PoleError,
    SeriesStatus,
    alpha_alternating_sum,
    alpha_power_sum,
    basis_value,
    closed_form_c1_r2,
    coeff_cnj,
    parseval_integral,
    power_sum_closed_c1_r2,
    power_sum_closed_c1_r2_complex,
    power_sum_series,
    szasz_basis_value,
    szasz_integral,
    szasz_sum,
)

GRID = [0, 0.1, 0.5, 1, 2, 5, 10]


@pytest.mark.parametrize("n,c,r", [(1, 1.0, 2), (5, 0.5, 3), (2, 0.0, 2), (7, 2.0, 4)])
def test_series_at_zero(n, c, r):
    ev = power_sum_series(BaskakovParams(n, c, r), 0.0)
    assert ev.value == 1.0 and ev.status is SeriesStatus.CONVERGED


def test_series_examples():
    assert power_sum_series(BaskakovParams(1, 1.0), 1.0).value == pytest.approx(1 / 3, rel=1e-15)
    assert power_sum_series(BaskakovParams(2, 1.0), 1.0).value == pytest.approx(5 / 27, rel=1e-15)


@pytest.mark.parametrize("n,x", [(3, 0.7), (6, 2.0), (12, 9.0)])
def test_series_matches_direct_sum_of_basis(n, x):
    p = BaskakovParams(n, 1.0)
    direct = math.fsum(basis_value(p, k, x) ** 2 for k in range(2000))
    assert power_sum_series(p, x).value == pytest.approx(direct, rel=1e-13)


def test_series_status_invariant():
    for n, c, x in [(3, 2.0, 5.0), (10, 0.5, 20.0), (1, 1.0, 300.0)]:
        ev = power_sum_series(BaskakovParams(n, c), x, rel_tol=1e-12)
        assert ev.converged
        assert 0 <= ev.tail_bound <= 1e-12 * max(1.0, ev.value)


def test_series_cap_hit_is_reported():
    ev = power_sum_series(BaskakovParams(10, 2.0), 1e4)
    assert ev.status is SeriesStatus.TRUNCATION_CAP_HIT
    assert not ev.converged


def test_series_domain():
    with pytest.raises(DomainError):
        power_sum_series(BaskakovParams(2, 1.0), -1.0)
    with pytest.raises(DomainError):
        power_sum_series(BaskakovParams(2, 1.0), 1.0, rel_tol=2.0)


def test_coefficient_examples():
    assert coeff_cnj(1, 0) == 1
    assert coeff_cnj(2, 0) == Fraction(1, 2) == coeff_cnj(2, 1)
    assert sum(closed_form_c1_r2(5).coeffs) == 1
    with pytest.raises(DomainError):
        coeff_cnj(3, 3)


@pytest.mark.parametrize("n", [1, 2, 7, 30, 200])
def test_coefficients_match_factorial_formula(n):
    for j in {0, n // 2, n - 1}:
        ref = Fraction(math.factorial(2 * j) * math.factorial(2 * n - 2 * j - 2),
                       4 ** (n - 1) * (math.factorial(j) * math.factorial(n - 1 - j)) ** 2)
        assert coeff_cnj(n, j) == ref


@given(st.integers(1, 120))
def test_coefficients_positive_and_sum_one(n):
    cf = closed_form_c1_r2(n)
    assert all(c > 0 for c in cf.coeffs)
    assert sum(cf.coeffs) == 1


def test_closed_form_examples():
    assert power_sum_closed_c1_r2(1, 1.0) == pytest.approx(1 / 3, rel=1e-15)
    assert power_sum_closed_c1_r2(2, 0.0) == 1.0
    assert power_sum_closed_c1_r2(2, 1.0) == pytest.approx(5 / 27, rel=1e-15)
    with pytest.raises(PoleError):
        power_sum_closed_c1_r2(3, -0.5)


def test_closed_form_c2_oracle():
    # psi_{2,1} = (2x^2+2x+1)/(1+2x)^3
    for x in np.linspace(0, 10, 10):
        assert power_sum_closed_c1_r2(2, x) == pytest.approx((2 * x * x + 2 * x + 1) / (1 + 2 * x) ** 3, rel=1e-14)


@pytest.mark.parametrize("n", range(1, 21))
def test_closed_form_vs_series(n):
    for x in GRID:
        closed = power_sum_closed_c1_r2(n, x)
        assert power_sum_series(BaskakovParams(n, 1.0), x).value == pytest.approx(closed, rel=1e-10)


def test_complex_variant_agrees_on_real_axis():
    for n in (2, 5, 9):
        for x in (0.0, 0.3, 4.0):
            z = power_sum_closed_c1_r2_complex(n, complex(x, 0))
            assert z.imag == 0 or abs(z.imag) < 1e-15
            assert z.real == pytest.approx(power_sum_closed_c1_r2(n, x), rel=1e-14)


def test_closed_form_callable_matches_function():
    f = closed_form_c1_r2(6)
    assert f(0.8) == pytest.approx(power_sum_closed_c1_r2(6, 0.8), rel=1e-15)


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("c", [0.5, 1.0, 2.0])
def test_alpha_scaling(n, c):
    for x in (0.3, 1.0, 4.0):
        a = power_sum_series(BaskakovParams(n, c), x).value
        assert alpha_power_sum(n / c, c * x).value == pytest.approx(a, rel=1e-9)
        assert parseval_integral(n, x, 2048, c=c) == pytest.approx(a, rel=1e-9)


@given(st.integers(1, 12), st.sampled_from([0.0, 0.5, 1.0, 2.0]), st.floats(0, 30), st.floats(0.01, 30))
def test_monotone_decrease_and_range(n, c, x, dx):
    p = BaskakovParams(n, c)
    a, b = power_sum_series(p, x).value, power_sum_series(p, x + dx).value
    assert 0 < b < a <= 1 or (x == 0 and b < a == 1)


def test_alternating_sum_even_equals_power_sum():
    for alpha, y in [(0.5, 0.4), (2.0, 3.0)]:
        assert alpha_alternating_sum(alpha, y, 4) == pytest.approx(alpha_power_sum(alpha, y, 4).value, rel=1e-14)


def test_alternating_sum_odd_r_alpha1():
    # alpha = 1: p_k = q^k/(1+y); signed sum is (1+y)^-3 / (1 + q^3)
    y = 0.7
    q = y / (1 + y)
    assert alpha_alternating_sum(1.0, y, 3) == pytest.approx((1 + y) ** -3 / (1 + q**3), rel=1e-14)


@pytest.mark.parametrize("n,x,expected", [(3, 0.0, 1.0), (1, 1.0, 0.3085083226), (2, 0.25, 0.4657596076)])
def test_szasz_examples(n, x, expected):
    assert szasz_sum(n, x) == pytest.approx(expected, abs=5e-11)  # reference rounded to 10 digits


@pytest.mark.parametrize("n,x", [(1, 0.01), (2, 0.7), (3, 4.0), (5, 9.0), (4, 40.0), (10, 100.0)])
def test_szasz_consistency(n, x):
    direct = math.fsum(szasz_basis_value(n, k, x) ** 2 for k in range(int(3 * n * x) + 200))
    ref = float(mp.exp(-2 * n * x) * mp.besseli(0, 2 * n * x))
    val = szasz_sum(n, x)
    assert val == pytest.approx(ref, rel=1e-12)
    assert val == pytest.approx(direct, rel=1e-10)
    assert val == pytest.approx(szasz_integral(n, x, 4096), rel=1e-8)
    assert power_sum_series(BaskakovParams(n, 0.0), x).value == pytest.approx(val, rel=1e-10)
