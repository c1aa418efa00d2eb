"""Dense univariate polynomials in t over exact rationals.

Coefficients are `fractions.Fraction` (always reduced, positive
denominator), stored ascending: index i is the coefficient of t^i.
The zero polynomial is the empty coefficient tuple.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Scalar = Union[Fraction, int]


class Poly:
    """A polynomial in t, e.g. Poly([0, 1, 4, 1]) is t + 4*t^2 + t^3."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other: Scalar) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        # Repeated squaring; k = 0 gives 1 (0^0 = 1, empty-product convention).
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact long division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lb
            quot[i - db] = q
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] -= q * b
        return Poly(quot), Poly(rem)

    def eval(self, x0: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def subs_t_power(self, m: int) -> "Poly":
        """Substitute t -> t^m (index dilation)."""
        if m < 1:
            raise ValueError("power substitution requires m >= 1")
        if m == 1 or self.is_zero:
            return self
        out = [Fraction(0)] * (self.degree * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Poly(out)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot make zero polynomial monic")
        return self * (1 / self.leading)

    def reversed_coeffs(self) -> "Poly":
        """t^deg * p(1/t); used for palindromicity checks."""
        return Poly(list(reversed(self.coeffs)))

    # -- rendering / parsing --------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = "t" if i == 1 else f"t^{i}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly('{self}')"


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


_TERM_RE = re.compile(
    r"^(?P<sign>[+-]?)(?P<num>\d+(?:/\d+)?)?(?:\*)?(?P<var>t(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(text: str) -> Poly:
    """Parse the rendering grammar, e.g. 't + 4*t^2 + t^3' or '-1/4*t'."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    tokens = s.replace("-", "+-").split("+")
    coeffs: dict[int, Fraction] = {}
    seen = False
    for tok in tokens:
        if not tok:
            continue
        m = _TERM_RE.match(tok)
        if not m or (m.group("num") is None and m.group("var") is None):
            raise ValueError(f"bad polynomial term: {tok!r}")
        seen = True
        c = Fraction(m.group("num")) if m.group("num") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("var") is None:
            k = 0
        elif m.group("exp") is None:
            k = 1
        else:
            k = int(m.group("exp"))
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    if not seen:
        raise ValueError(f"no terms in polynomial string: {text!r}")
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(out)


# -- module-level helpers ---------------------------------------------


def geometric_poly(m: int) -> Poly:
    """1 + t + ... + t^(m-1), so that (1-t) * result = 1 - t^m."""
    if m < 1:
        raise ValueError("geometric polynomial requires m >= 1")
    return Poly([1] * m)


def exact_div(a: Poly, b: Poly) -> Poly:
    """Division known to be exact; raises if a remainder appears."""
    q, r = divmod(a, b)
    if not r.is_zero:
        raise ArithmeticError(f"inexact polynomial division: remainder {r}")
    return q


def _int_primitive(coeffs: list[int]) -> list[int]:
    """Divide out the integer content; leading coefficient made positive."""
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    if g == 0:
        return coeffs
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _to_int_primitive(p: Poly) -> list[int]:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return _int_primitive([int(c * lcm) for c in p.coeffs])


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Integer pseudo-remainder of a by b (both ascending, b nonzero)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db:
        if rem[-1] == 0:
            rem.pop()
            continue
        top = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, bc in enumerate(b):
            rem[shift + j] -= top * bc
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
    return rem


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via Euclid on integer primitive parts.

    Clearing content after each pseudo-remainder keeps coefficients small
    at the degrees this package works with.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    x, y = _to_int_primitive(a), _to_int_primitive(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_primitive(_pseudo_rem(x, y))
    return Poly(x).monic()


# -- Taylor shift at t = 1 ---------------------------------------------


def _div_by_t_minus_one(cs: tuple[Fraction, ...]) -> tuple[list[Fraction], Fraction]:
    """Synthetic division by (t - 1): quotient (ascending) and remainder."""
    acc = Fraction(0)
    out: list[Fraction] = []
    for c in reversed(cs):
        acc = acc + c
        out.append(acc)
    return list(reversed(out[:-1])), out[-1]


def shifted_basis_coeffs(p: Poly) -> tuple[Fraction, ...]:
    """Coefficients d_i with p = sum d_i * (t-1)^i (Horner/Ruffini cascade)."""
    ds: list[Fraction] = []
    cs = p.coeffs
    while cs:
        quot, rem = _div_by_t_minus_one(cs)
        ds.append(rem)
        cs = tuple(quot)
    return tuple(ds)


def remainder_mod_shift_power(p: Poly, k: int) -> tuple[Poly, tuple[Fraction, ...]]:
    """Remainder of p modulo (t-1)^k, plus the full shifted coefficient list.

    The remainder is sum_{i<k} d_i (t-1)^i re-expanded in t, so
    p - remainder is exactly divisible by (t-1)^k.
    """
    if k < 1:
        raise ValueError("modulus exponent must be >= 1")
    ds = shifted_basis_coeffs(p)
    shift = Poly([-1, 1])
    rem = Poly()
    for d in reversed(ds[:k]):
        rem = rem * shift + Poly([d])
    return rem, ds
