"""Command-line front end: construct, verify, and trace.

Exit codes: 0 success with all checks passing, 1 any failed
mathematical check, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from .congruence import CongruenceReport, verify_congruence
from .eulerian import eulerian_bruteforce, eulerian_from_gf, eulerian_recurrence
from .poly import Poly
from .prooftrace import TraceReport, full_trace
from .ratfunc import RatFunc

N_CAP = 64
M_CAP = 64

METHODS = {
    "recurrence": eulerian_recurrence,
    "bruteforce": eulerian_bruteforce,
    "gf": eulerian_from_gf,
}


# -- rendering ---------------------------------------------------------


def frac_str(c: Fraction) -> str:
    return str(c)


def coeff_list(p: Poly) -> list[str]:
    return [frac_str(c) for c in p.coeffs]


def poly_latex(p: Poly) -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        mag_tex = str(mag) if mag.denominator == 1 else (
            f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        )
        if i == 0:
            term = mag_tex
        else:
            var = "t" if i == 1 else f"t^{{{i}}}"
            term = var if mag == 1 else mag_tex + var
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


def ratfunc_json(r: RatFunc) -> dict:
    return {"num": coeff_list(r.num), "den": coeff_list(r.den)}


def report_json(rep: CongruenceReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "holds": rep.holds,
        "lhs": coeff_list(rep.lhs),
        "rhs": coeff_list(rep.rhs),
        "remainder": coeff_list(rep.remainder),
        "cofactor": coeff_list(rep.cofactor),
    }


def trace_json(rep: TraceReport) -> dict:
    return {
        "n": rep.n,
        "m": rep.m,
        "holds": rep.all_checks,
        "diff": ratfunc_json(rep.diff_value),
        "per_j": [
            {
                "j": term.j,
                "value": ratfunc_json(term.value),
                "divisor_exponent": term.divisor_exponent,
            }
            for term in rep.per_j
        ],
        "den_at_one": frac_str(rep.den_at_one),
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


# -- argument parsing ---------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulercong",
        description="Eulerian polynomial congruence toolkit (exact arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_euler = sub.add_parser("eulerian", help="construct A_n(t)")
    p_euler.add_argument("--n", type=int, required=True)
    p_euler.add_argument("--method", choices=sorted(METHODS), default="recurrence")
    p_euler.add_argument("--format", choices=["plain", "latex", "json"],
                         default="plain")

    p_verify = sub.add_parser("verify", help="check the congruence mod (t-1)^(n+1)")
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--n-max", type=int, dest="n_max")
    p_verify.add_argument("--m-max", type=int, dest="m_max")
    p_verify.add_argument("--format", choices=["plain", "latex", "json"],
                          default="plain")
    p_verify.add_argument("--parallel", type=int, default=1, metavar="W")

    p_trace = sub.add_parser("trace", help="replay the proof steps for one (n, m)")
    p_trace.add_argument("--n", type=int, required=True)
    p_trace.add_argument("--m", type=int, required=True)
    p_trace.add_argument("--format", choices=["plain", "latex", "json"],
                         default="plain")

    return parser


def _check_n(parser: argparse.ArgumentParser, n: int) -> None:
    if not 0 <= n <= N_CAP:
        parser.error(f"n must be in [0, {N_CAP}], got {n}")


def _check_m(parser: argparse.ArgumentParser, m: int) -> None:
    if not 1 <= m <= M_CAP:
        parser.error(f"m must be in [1, {M_CAP}], got {m}")


# -- commands ------------------------------------------------------------


def _cmd_eulerian(args, parser) -> int:
    _check_n(parser, args.n)
    try:
        ep = METHODS[args.method](args.n)
    except ValueError as exc:  # brute-force cap
        parser.error(str(exc))
    if args.format == "plain":
        print(ep.poly)
    elif args.format == "latex":
        print(f"A_{{{ep.n}}}(t) = {poly_latex(ep.poly)}")
    else:
        print(dump_json({
            "n": ep.n,
            "method": args.method,
            "coeffs": coeff_list(ep.poly),
        }))
    return 0


def _verify_grid(args, parser) -> list[tuple[int, int]]:
    single = args.n is not None or args.m is not None
    ranged = args.n_max is not None or args.m_max is not None
    if single == ranged:
        parser.error("verify needs either --n and --m, or --n-max and --m-max")
    if single:
        if args.n is None or args.m is None:
            parser.error("verify needs both --n and --m")
        _check_n(parser, args.n)
        _check_m(parser, args.m)
        return [(args.n, args.m)]
    if args.n_max is None or args.m_max is None:
        parser.error("verify needs both --n-max and --m-max")
    _check_n(parser, args.n_max)
    _check_m(parser, args.m_max)
    return [(n, m) for n in range(args.n_max + 1) for m in range(1, args.m_max + 1)]


def _cmd_verify(args, parser) -> int:
    grid = _verify_grid(args, parser)
    if args.parallel < 1:
        parser.error("--parallel must be >= 1")
    if args.parallel > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            reports = list(pool.map(_verify_pair, grid))
    else:
        reports = [verify_congruence(n, m) for n, m in grid]
    reports.sort(key=lambda r: (r.n, r.m))

    if args.format == "json":
        print(dump_json([report_json(r) for r in reports]))
    elif args.format == "latex":
        for r in reports:
            status = "\\checkmark" if r.holds else "\\times"
            print(
                f"A_{{{r.n}}}(t^{{{r.m}}}) \\equiv {poly_latex(r.rhs)}"
                f" \\pmod{{(t-1)^{{{r.n + 1}}}}} \\quad {status}"
            )
    else:
        for r in reports:
            print(f"n={r.n} m={r.m} holds={str(r.holds).lower()} "
                  f"remainder={r.remainder}")
    return 0 if all(r.holds for r in reports) else 1


def _verify_pair(nm: tuple[int, int]) -> CongruenceReport:
    return verify_congruence(*nm)


def _cmd_trace(args, parser) -> int:
    _check_n(parser, args.n)
    _check_m(parser, args.m)
    rep = full_trace(args.n, args.m)
    if args.format == "json":
        print(dump_json(trace_json(rep)))
    elif args.format == "latex":
        print(f"\\text{{difference}} = {poly_latex(rep.diff_value.num)}"
              f" / \\left({poly_latex(rep.diff_value.den)}\\right)")
        for term in rep.per_j:
            print(f"j = {term.j}: {poly_latex(term.value.num)}"
                  f" / \\left({poly_latex(term.value.den)}\\right),"
                  f" \\; k = {term.divisor_exponent}")
    else:
        print(f"n={rep.n} m={rep.m} all_checks={str(rep.all_checks).lower()}")
        print(f"  difference = {rep.diff_value}")
        print(f"  series coefficient = {rep.series_value}")
        print(f"  denominator at t=1: {rep.den_at_one}")
        for term in rep.per_j:
            print(f"  j={term.j}: value={term.value} "
                  f"divisor_exponent={term.divisor_exponent}")
    return 0 if rep.all_checks else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eulerian":
        return _cmd_eulerian(args, parser)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    return _cmd_trace(args, parser)


if __name__ == "__main__":
    sys.exit(main())
