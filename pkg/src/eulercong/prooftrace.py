"""Mechanical replay of the generating-function proof of the congruence.

Every step is recomputed in exact arithmetic and cross-checked:

  1. the rational-function difference
         m^(n+1) A_n(t^m)/(1-t^m)^(n+1) - A_n(t)/(1-t)^(n+1)
     has a denominator that does not vanish at t = 1;
  2. the same value falls out as the x^n/n! coefficient of
         m/(1 - t^m e^(mx)) - 1/(1 - t e^x);
  3. that kernel difference telescopes into the m quotients
         (1 - t^j e^(jx))/(1 - t^m e^(mx)), 0 <= j < m,
     each of whose coefficient denominators divides a power of
     1 + t + ... + t^(m-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .eulerian import eulerian_recurrence
from .poly import ONE, Poly, geometric_poly
from .ratfunc import RF_ZERO, RatFunc
from .series import (
    TruncatedSeries,
    constant_series,
    geometric_exp_sum,
    lift_to_ratfunc,
    scaled_exp,
)


@dataclass(frozen=True)
class RatioTerm:
    j: int
    value: RatFunc
    divisor_exponent: Optional[int]


@dataclass(frozen=True)
class TraceReport:
    n: int
    m: int
    diff_value: RatFunc
    series_value: RatFunc
    per_j: tuple[RatioTerm, ...]
    den_at_one: Fraction
    all_checks: bool


def _check_nm(n: int, m: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 1:
        raise ValueError("m must be >= 1")


def diff_rational(n: int, m: int) -> RatFunc:
    """The reduced difference of the two normalized Eulerian fractions."""
    _check_nm(n, m)
    a = eulerian_recurrence(n).poly
    one_minus_tm = Poly([1]) - Poly([0] * m + [1])
    left = RatFunc(a.subs_t_power(m) * (m ** (n + 1)), one_minus_tm ** (n + 1))
    right = RatFunc(a, Poly([1, -1]) ** (n + 1))
    return left - right


def _one_minus_scaled_exp(m: int, order: int) -> TruncatedSeries:
    """1 - t^m e^(mx) over RatFunc coefficients."""
    tm = RatFunc(Poly([0] * m + [1]))
    one = constant_series(RatFunc(ONE), order)
    return one - scaled_exp(tm, m, order)


def series_difference_coeff(n: int, m: int) -> RatFunc:
    """EGF coefficient n of m/(1 - t^m e^(mx)) - 1/(1 - t e^x)."""
    _check_nm(n, m)
    one = constant_series(RatFunc(ONE), n)
    m_const = constant_series(RatFunc(Poly([m])), n)
    diff = m_const / _one_minus_scaled_exp(m, n) - one / _one_minus_scaled_exp(1, n)
    return diff.egf_coeff(n)


def ratio_coeff(j: int, m: int, n: int) -> tuple[RatFunc, Optional[int]]:
    """EGF coefficient n of (1 - t^j e^(jx))/(1 - t^m e^(mx)).

    Computed from the geometric-sum form and cross-checked against the
    direct form; the two must agree identically. The second return is
    the smallest exponent k <= n+1 with the reduced denominator dividing
    (1 + t + ... + t^(m-1))^k.
    """
    _check_nm(n, m)
    if not 0 <= j < m:
        raise ValueError("ratio term requires 0 <= j < m")
    den = lift_to_ratfunc(geometric_exp_sum(m, n))
    if j == 0:
        value = RF_ZERO
    else:
        num = lift_to_ratfunc(geometric_exp_sum(j, n))
        value = (num / den).egf_coeff(n)
    # Direct left-hand form of the same quotient.
    direct = (_one_minus_scaled_exp(j, n) / _one_minus_scaled_exp(m, n)) if j >= 1 \
        else constant_series(RF_ZERO, n)
    if direct.egf_coeff(n) != value:
        raise ArithmeticError(
            f"ratio forms disagree at j={j}, m={m}, n={n}: arithmetic bug"
        )
    if value.den == ONE:
        exponent: Optional[int] = 0
    else:
        exponent = value.den_divides_power(geometric_poly(m), n + 1)
    return value, exponent


def full_trace(n: int, m: int) -> TraceReport:
    """Run every proof step for one (n, m) and record all intermediates."""
    _check_nm(n, m)
    diff_value = diff_rational(n, m)
    series_value = series_difference_coeff(n, m)
    per_j = tuple(
        RatioTerm(j, *ratio_coeff(j, m, n)) for j in range(m)
    )
    telescoped = RF_ZERO
    for term in per_j:
        telescoped = telescoped + term.value
    den_at_one = diff_value.den_value_at(1)
    all_checks = (
        diff_value == series_value
        and telescoped == series_value
        and den_at_one != 0
        and all(term.divisor_exponent is not None for term in per_j)
    )
    return TraceReport(
        n=n,
        m=m,
        diff_value=diff_value,
        series_value=series_value,
        per_j=per_j,
        den_at_one=den_at_one,
        all_checks=all_checks,
    )


def xp_decompose(m: int, order: int) -> tuple[Poly, TruncatedSeries]:
    """Split sum_j t^j e^(jx) as (1 + t + ... + t^(m-1)) + x * P(t, x).

    Returns the constant part and P (order reduced by one); every
    coefficient of P is a polynomial in t.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1 to expose the x-tail")
    s = geometric_exp_sum(m, order)
    constant = s.coeffs[0]
    if constant != geometric_poly(m):
        raise ArithmeticError("constant term is not the geometric polynomial")
    return constant, TruncatedSeries(s.coeffs[1:])
