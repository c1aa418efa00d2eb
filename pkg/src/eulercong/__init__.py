"""Exact-arithmetic toolkit for the Eulerian polynomial congruence

    A_n(t^m) == ((1 + t + ... + t^(m-1)) / m)^(n+1) * A_n(t)  mod (t-1)^(n+1)

with a mechanical, machine-checked replay of its generating-function proof.
"""

from .congruence import CongruenceReport, congruence_sides, report_from_sides, verify_congruence
from .eulerian import (
    EulerianPoly,
    eulerian_bruteforce,
    eulerian_from_gf,
    eulerian_recurrence,
    worpitzky_row,
)
from .poly import (
    Poly,
    exact_div,
    geometric_poly,
    parse_poly,
    poly_gcd,
    remainder_mod_shift_power,
    shifted_basis_coeffs,
)
from .prooftrace import (
    RatioTerm,
    TraceReport,
    diff_rational,
    full_trace,
    ratio_coeff,
    series_difference_coeff,
    xp_decompose,
)
from .ratfunc import RatFunc
from .series import (
    TruncatedSeries,
    constant_series,
    geometric_exp_sum,
    lift_to_ratfunc,
    scaled_exp,
)

__all__ = [
    "CongruenceReport",
    "EulerianPoly",
    "Poly",
    "RatFunc",
    "RatioTerm",
    "TraceReport",
    "TruncatedSeries",
    "congruence_sides",
    "constant_series",
    "diff_rational",
    "eulerian_bruteforce",
    "eulerian_from_gf",
    "eulerian_recurrence",
    "exact_div",
    "full_trace",
    "geometric_exp_sum",
    "geometric_poly",
    "lift_to_ratfunc",
    "parse_poly",
    "poly_gcd",
    "ratio_coeff",
    "remainder_mod_shift_power",
    "report_from_sides",
    "scaled_exp",
    "series_difference_coeff",
    "shifted_basis_coeffs",
    "verify_congruence",
    "worpitzky_row",
    "xp_decompose",
]

__version__ = "0.1.0"
