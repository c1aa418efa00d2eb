"""Eulerian polynomials A_n(t), built by three independent methods.

Normalization: A_n(t) = sum over permutations of {1..n} of t^(des+1)
for n >= 1, with A_0 = 1. This is the convention fixed by the
generating function sum_n A_n(t)/(1-t)^(n+1) x^n/n! = 1/(1 - t e^x),
so A_1(t) = t (NOT the also-common A_1(t) = 1). The congruence this
package verifies is false under the other convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .poly import Poly
from .ratfunc import RatFunc
from .series import TruncatedSeries, constant_series, scaled_exp

BRUTEFORCE_CAP = 9


@dataclass(frozen=True)
class EulerianPoly:
    n: int
    poly: Poly

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")


def eulerian_recurrence(n: int) -> EulerianPoly:
    """A_{k+1}(t) = (k+1) t A_k(t) + t (1-t) A_k'(t), from A_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = Poly([0, 1])
    t_one_minus_t = Poly([0, 1, -1])
    a = Poly([1])
    for k in range(n):
        a = (k + 1) * t * a + t_one_minus_t * a.derivative()
    return EulerianPoly(n, a)


def eulerian_bruteforce(n: int, cap: int = BRUTEFORCE_CAP) -> EulerianPoly:
    """Descent enumeration over all n! permutations; the trusted oracle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ValueError(f"brute force capped at n <= {cap} (got {n})")
    if n == 0:
        return EulerianPoly(0, Poly([1]))
    counts = [0] * (n + 1)
    for sigma in permutations(range(n)):
        des = sum(1 for i in range(n - 1) if sigma[i] > sigma[i + 1])
        counts[des + 1] += 1
    return EulerianPoly(n, Poly(counts))


def eulerian_from_gf(n: int) -> EulerianPoly:
    """Extract A_n from 1/(1 - t e^x): the EGF coefficient times (1-t)^(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = RatFunc(Poly([0, 1]))
    one = constant_series(RatFunc(Poly([1])), n)
    kernel = one / (one - scaled_exp(t, 1, n))
    c = kernel.egf_coeff(n)
    value = c * RatFunc(Poly([1, -1]) ** (n + 1))
    if value.den != Poly([1]):
        raise ArithmeticError("GF extraction did not produce a polynomial")
    if any(c.denominator != 1 for c in value.num.coeffs):
        raise ArithmeticError("GF extraction produced non-integer coefficients")
    return EulerianPoly(n, value.num)


def worpitzky_row(n: int, K: int) -> list[Fraction]:
    """Coefficients of t^0..t^K in A_n(t)/(1-t)^(n+1); coefficient k is k^n.

    Computed by series deconvolution in t over the rationals (0^0 = 1).
    """
    if n < 0 or K < 0:
        raise ValueError("n and K must be nonnegative")
    a = eulerian_recurrence(n).poly
    b = Poly([1, -1]) ** (n + 1)
    num = TruncatedSeries([a.coeff(i) for i in range(K + 1)])
    den = TruncatedSeries([b.coeff(i) for i in range(K + 1)])
    return list((num / den).coeffs)
