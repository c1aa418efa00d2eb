from fractions import Fraction

import pytest

from eulercong.eulerian import eulerian_recurrence
from eulercong.poly import Poly, geometric_poly
from eulercong.prooftrace import (
    diff_rational,
    full_trace,
    ratio_coeff,
    series_difference_coeff,
    xp_decompose,
)
from eulercong.ratfunc import RF_ZERO, RatFunc
from eulercong.series import constant_series, scaled_exp


def test_diff_rational_n0_m2():
    assert diff_rational(0, 2) == RatFunc(Poly([1]), Poly([1, 1]))


def test_diff_rational_n1_m2():
    assert diff_rational(1, 2) == RatFunc(Poly([0, -1]), Poly([1, 2, 1]))


@pytest.mark.parametrize("n", range(5))
def test_diff_rational_m1_vanishes(n):
    assert diff_rational(n, 1) == RF_ZERO


def test_series_difference_matches_examples():
    assert series_difference_coeff(1, 2) == RatFunc(Poly([0, -1]), Poly([1, 2, 1]))
    assert series_difference_coeff(0, 2) == RatFunc(Poly([1]), Poly([1, 1]))
    assert series_difference_coeff(0, 1) == RF_ZERO


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("m", range(1, 7))
def test_series_equals_rational_difference(n, m):
    assert series_difference_coeff(n, m) == diff_rational(n, m)


def test_ratio_coeff_j_zero():
    value, exponent = ratio_coeff(0, 3, 2)
    assert value == RF_ZERO
    assert exponent == 0


def test_ratio_coeff_j1_m2_n0():
    value, exponent = ratio_coeff(1, 2, 0)
    assert value == RatFunc(Poly([1]), Poly([1, 1]))
    assert exponent == 1


def test_ratio_coeff_j1_m2_n1():
    value, exponent = ratio_coeff(1, 2, 1)
    assert value == RatFunc(Poly([0, -1]), Poly([1, 2, 1]))
    assert exponent == 2


def test_ratio_coeff_rejects_bad_j():
    with pytest.raises(ValueError):
        ratio_coeff(2, 2, 1)


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("m", range(1, 7))
def test_denominator_divides_geometric_power(n, m):
    for j in range(m):
        value, exponent = ratio_coeff(j, m, n)
        assert exponent is not None
        if m > 1:
            _, rem = divmod(geometric_poly(m) ** (n + 1), value.den)
            assert rem.is_zero


def test_xp_decompose_examples():
    constant, p = xp_decompose(1, 2)
    assert constant == Poly([1])
    assert all(c.is_zero for c in p.coeffs)

    constant, p = xp_decompose(2, 2)
    assert constant == Poly([1, 1])
    assert p.coeffs == (Poly([0, 1]), Poly([0, Fraction(1, 2)]))

    constant, p = xp_decompose(3, 1)
    assert constant == Poly([1, 1, 1])
    assert p.coeffs == (Poly([0, 1, 2]),)


def test_full_trace_n1_m2():
    rep = full_trace(1, 2)
    assert rep.all_checks
    assert rep.den_at_one == 4
    assert [(t.j, t.value, t.divisor_exponent) for t in rep.per_j] == [
        (0, RF_ZERO, 0),
        (1, RatFunc(Poly([0, -1]), Poly([1, 2, 1])), 2),
    ]
    assert rep.diff_value == RatFunc(Poly([0, -1]), Poly([1, 2, 1]))


def test_full_trace_trivial():
    rep = full_trace(0, 1)
    assert rep.all_checks
    assert rep.diff_value == RF_ZERO


def test_full_trace_n3_m3():
    assert full_trace(3, 3).all_checks


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("m", range(1, 7))
def test_telescoping_sum(n, m):
    rep = full_trace(n, m)
    total = RF_ZERO
    for term in rep.per_j:
        total = total + term.value
    assert total == rep.series_value
    assert rep.all_checks


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("m", range(1, 5))
def test_substitution_consistency(n, m):
    # m^(n+1) A_n(t^m)/(1-t^m)^(n+1) equals the EGF coefficient n of
    # m/(1 - t^m e^(mx)).
    a = eulerian_recurrence(n).poly
    direct = RatFunc(
        a.subs_t_power(m) * (m ** (n + 1)),
        (Poly([1]) - Poly([0] * m + [1])) ** (n + 1),
    )
    one = constant_series(RatFunc(Poly([1])), n)
    m_const = constant_series(RatFunc(Poly([m])), n)
    tm = RatFunc(Poly([0] * m + [1]))
    kernel = m_const / (one - scaled_exp(tm, m, n))
    assert kernel.egf_coeff(n) == direct
