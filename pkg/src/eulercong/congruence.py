"""Exact verification of the Eulerian polynomial congruence.

Checks A_n(t^m) == ((1 + t + ... + t^(m-1))/m)^(n+1) * A_n(t)
modulo (t-1)^(n+1), over the rationals, and records a full audit
certificate for every check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eulerian import eulerian_recurrence
from .poly import Poly, exact_div, geometric_poly, remainder_mod_shift_power


@dataclass(frozen=True)
class CongruenceReport:
    n: int
    m: int
    lhs: Poly
    rhs: Poly
    difference: Poly
    remainder: Poly
    cofactor: Poly
    holds: bool


def congruence_sides(n: int, m: int) -> tuple[Poly, Poly]:
    """(A_n(t^m), geometric(m)^(n+1) * A_n(t) / m^(n+1)), both exact."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = eulerian_recurrence(n).poly
    lhs = a.subs_t_power(m)
    rhs = geometric_poly(m) ** (n + 1) * a * Fraction(1, m ** (n + 1))
    return lhs, rhs


def report_from_sides(n: int, m: int, lhs: Poly, rhs: Poly) -> CongruenceReport:
    """Reduce lhs - rhs modulo (t-1)^(n+1) and assemble the certificate."""
    difference = lhs - rhs
    remainder, _ = remainder_mod_shift_power(difference, n + 1)
    modulus = Poly([-1, 1]) ** (n + 1)
    cofactor = exact_div(difference - remainder, modulus)
    return CongruenceReport(
        n=n,
        m=m,
        lhs=lhs,
        rhs=rhs,
        difference=difference,
        remainder=remainder,
        cofactor=cofactor,
        holds=remainder.is_zero,
    )


def verify_congruence(n: int, m: int) -> CongruenceReport:
    lhs, rhs = congruence_sides(n, m)
    return report_from_sides(n, m, lhs, rhs)
