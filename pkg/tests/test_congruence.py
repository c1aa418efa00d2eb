from fractions import Fraction

import pytest

from eulercong.congruence import (
    congruence_sides,
    report_from_sides,
    verify_congruence,
)
from eulercong.eulerian import eulerian_recurrence
from eulercong.poly import Poly, geometric_poly
from eulercong.prooftrace import diff_rational

F = Fraction


def test_sides_n1_m2():
    lhs, rhs = congruence_sides(1, 2)
    assert lhs == Poly([0, 0, 1])
    assert rhs == Poly([0, F(1, 4), F(1, 2), F(1, 4)])


def test_sides_n0_m1():
    assert congruence_sides(0, 1) == (Poly([1]), Poly([1]))


def test_sides_n0_m3():
    lhs, rhs = congruence_sides(0, 3)
    assert lhs == Poly([1])
    assert rhs == Poly([F(1, 3), F(1, 3), F(1, 3)])


def test_verify_n1_m2_certificate():
    rep = verify_congruence(1, 2)
    assert rep.holds
    assert rep.difference == Poly([0, F(-1, 4), F(1, 2), F(-1, 4)])
    assert rep.cofactor == Poly([0, F(-1, 4)])
    assert rep.remainder.is_zero
    # Sharpness diagnostic at this instance: cofactor(1) != 0.
    assert rep.cofactor.eval(1) == F(-1, 4)


@pytest.mark.parametrize("n", range(6))
def test_m_equals_one_is_trivial(n):
    rep = verify_congruence(n, 1)
    assert rep.holds
    assert rep.difference.is_zero


def test_negative_control_unscaled_rhs():
    # Omitting the 1/m^(n+1) factor must break the congruence at (1, 2).
    a = eulerian_recurrence(1).poly
    lhs = a.subs_t_power(2)
    rhs_unscaled = geometric_poly(2) ** 2 * a
    rep = report_from_sides(1, 2, lhs, rhs_unscaled)
    assert not rep.holds
    # Remainder is -3 - 6(t-1) re-expanded in t.
    assert rep.remainder == Poly([3, -6])


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("m", range(1, 9))
def test_theorem_on_grid(n, m):
    rep = verify_congruence(n, m)
    assert rep.holds
    modulus = Poly([-1, 1]) ** (n + 1)
    assert rep.cofactor * modulus + rep.remainder == rep.difference


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("m", range(1, 7))
def test_equivalence_with_rational_difference(n, m):
    # holds iff the denominator of the rational difference has no root at 1.
    rep = verify_congruence(n, m)
    assert rep.holds == (diff_rational(n, m).den_value_at(1) != 0)


def test_m_zero_rejected():
    with pytest.raises(ValueError):
        verify_congruence(1, 0)
