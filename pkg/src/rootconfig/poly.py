"""Exact rationals and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so a sign test is one integer comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisionByZeroPoly, ZeroPolynomial

Rat = Fraction
RatLike = Union[Fraction, int, str]

_TOKEN = re.compile(r"^-?\d+(?:/\d+|\.\d+)?$")


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or rational token ("-3", "2/7", "0.25") to a Fraction.

    Floats are refused: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        token = value.strip()
        if not _TOKEN.match(token):
            raise ValueError(f"not a rational token: {value!r}")
        try:
            return Fraction(token)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def format_rat(x: Fraction) -> str:
    return str(x)


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction -------------------------------------------------------
    @classmethod
    def monic(cls, *lower: RatLike) -> "Poly":
        """``Poly.monic(p, q, r)`` is x**3 + p*x**2 + q*x + r."""
        return cls(list(reversed([rat(c) for c in lower])) + [Fraction(1)])

    @classmethod
    def constant(cls, c: RatLike) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[RatLike, int]]) -> "Poly":
        out = cls([1])
        for root, mult in roots:
            if mult < 1:
                raise ValueError("multiplicity must be >= 1")
            lin = cls([-rat(root), 1])
            for _ in range(mult):
                out = out * lin
        return out

    # basic properties ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def lower_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients below the leading one, highest first: (p, q, r) for x^3+px^2+qx+r."""
        return tuple(reversed(self.coeffs[:-1]))

    # arithmetic ----------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Poly") -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["Poly", RatLike]) -> "Poly":
        if not isinstance(other, Poly):
            c = rat(other)
            return Poly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: RatLike) -> Fraction:
        return self.eval(x)

    def eval(self, x: RatLike) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monicize(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("cannot make the zero polynomial monic")
        lc = self.leading
        return Poly(c / lc for c in self.coeffs)

    def div_rem(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division: returns (quotient, remainder) with deg(remainder) < deg(divisor)."""
        if divisor.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = divisor.degree
        lc = divisor.leading
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dd])

    def __divmod__(self, divisor: "Poly"):
        return self.div_rem(divisor)

    def translate(self, c: RatLike) -> "Poly":
        """Return g with g(y) = f(y + c) (Taylor shift by synthetic division)."""
        c = rat(c)
        a = list(self.coeffs)
        n = len(a)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
        return Poly(a)

    def compose_neg(self) -> "Poly":
        """f(-x)."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    # display -------------------------------------------------------------
    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x", compact: bool = False) -> str:
        """Human-readable form; ``compact`` drops spaces, for single-token output."""
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if i == 0:
                body = str(mag)
            else:
                xs = var if i == 1 else f"{var}^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if not terms:
                terms.append(("-" if neg else "") + body)
            else:
                terms.append(("- " if neg else "+ ") + body)
        out = " ".join(terms)
        return out.replace(" ", "") if compact else out


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([rat(value)])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) is the zero polynomial."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.div_rem(b)[1]
    return a if a.is_zero() else a.monicize()


def exact_quotient(f: Poly, g: Poly) -> Poly:
    q, r = f.div_rem(g)
    if not r.is_zero():
        raise ArithmeticError(f"{g} does not divide {f}")
    return q


def monicize(f: Poly) -> Poly:
    return f.monicize()


def derivative(f: Poly) -> Poly:
    return f.derivative()


def div_rem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    return f.div_rem(g)


def translate(f: Poly, c: RatLike) -> Poly:
    return f.translate(c)


def from_roots(roots: Sequence[tuple[RatLike, int]]) -> Poly:
    return Poly.from_roots(roots)


def eval_poly(f: Poly, x: RatLike) -> Fraction:
    return f.eval(x)
