"""Root configuration of the monic quartic x^4 + p x^3 + q x^2 + r x + s.

The classifier evaluates closed-form witnesses only; it never builds a Sturm
chain at runtime.  Witness names:

========  ===============================================================
``D``     discriminant
``D1``    numerator of the x-coefficient of the degree-1 Sturm element, / 32
``D2``    numerator of the constant term of the leftover quadratic
``D3``    ``(8r - 4pq + p^3)(q^2 - 3pr + 12s)``
``D4``    ``(8r + p^3 - 4pq)(27rp^3 - 9p^2q^2 - 108pqr + 32q^3 + 108r^2)``
``D5``    discriminant of the degree-2 Sturm element once D1 = 0
``G``     ``3p^2 - 8q``
``H``     ``p^3 - 4pq + 8r``
``K``     ``p^4 - 256s``
========  ===============================================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import (
    InternalInconsistency,
    NotInDoubleCase,
    NotInTripleCase,
    NotInTwoDoubleCase,
    NotQuadruple,
)
from .poly import Poly, RatLike, rat, sign


class QuarticCoeffs(NamedTuple):
    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    @classmethod
    def of(cls, p: RatLike, q: RatLike, r: RatLike, s: RatLike) -> "QuarticCoeffs":
        return cls(rat(p), rat(q), rat(r), rat(s))

    @classmethod
    def from_poly(cls, f: Poly) -> "QuarticCoeffs":
        if f.degree != 4:
            raise ValueError(f"expected a quartic, got degree {f.degree}")
        return cls(*f.monicize().lower_coeffs())

    def poly(self) -> Poly:
        return Poly.monic(*self)

    def mirrored(self) -> "QuarticCoeffs":
        """Coefficients of f(-x)."""
        return QuarticCoeffs(-self.p, self.q, -self.r, self.s)


class QuarticConfig(enum.Enum):
    FOUR_DISTINCT_REAL = ("four_distinct_real", "1")
    TWO_REAL_TWO_COMPLEX = ("two_real_two_complex", "2")
    FOUR_COMPLEX = ("four_complex", "3")
    SINGLE_DOUBLE_SINGLE = ("double_two_singles/single_double_single", "4a")
    DOUBLE_BELOW_BOTH = ("double_two_singles/double_below_both", "4b")
    DOUBLE_ABOVE_BOTH = ("double_two_singles/double_above_both", "4c")
    DOUBLE_COMPLEX_PAIR = ("double_complex_pair", "5")
    TWO_REAL_DOUBLES = ("two_real_doubles", "6")
    TWO_COMPLEX_DOUBLES = ("two_complex_doubles", "7")
    TRIPLE_BELOW = ("triple_single/triple_below", "8a")
    TRIPLE_ABOVE = ("triple_single/triple_above", "8b")
    QUADRUPLE = ("quadruple", "9")

    def __init__(self, label: str, case: str):
        self.label = label
        self.case = case

    @property
    def distinct_real_roots(self) -> int:
        return _QUARTIC_REAL_COUNT[self]

    @classmethod
    def from_label(cls, label: str) -> "QuarticConfig":
        label = label.removeprefix("quartic/")
        for member in cls:
            if member.label == label or member.case == label:
                return member
        raise ValueError(f"unknown quartic label {label!r}")


_QUARTIC_REAL_COUNT = {
    QuarticConfig.FOUR_DISTINCT_REAL: 4,
    QuarticConfig.TWO_REAL_TWO_COMPLEX: 2,
    QuarticConfig.FOUR_COMPLEX: 0,
    QuarticConfig.SINGLE_DOUBLE_SINGLE: 3,
    QuarticConfig.DOUBLE_BELOW_BOTH: 3,
    QuarticConfig.DOUBLE_ABOVE_BOTH: 3,
    QuarticConfig.DOUBLE_COMPLEX_PAIR: 1,
    QuarticConfig.TWO_REAL_DOUBLES: 2,
    QuarticConfig.TWO_COMPLEX_DOUBLES: 0,
    QuarticConfig.TRIPLE_BELOW: 2,
    QuarticConfig.TRIPLE_ABOVE: 2,
    QuarticConfig.QUADRUPLE: 1,
}


class QuarticComplexConfig(enum.Enum):
    FOUR_DISTINCT = "four_distinct"
    DOUBLE_TWO_SINGLES = "double_two_singles"
    TWO_DOUBLES = "two_doubles"
    TRIPLE_SINGLE = "triple_single"
    QUADRUPLE = "quadruple"


@dataclass(frozen=True)
class QuarticInvariants:
    D: Fraction
    D1: Fraction
    D2: Fraction
    D3: Fraction
    D4: Fraction
    D5: Fraction
    G: Fraction
    H: Fraction
    K: Fraction

    def as_dict(self) -> dict[str, Fraction]:
        return {
            "D": self.D, "D1": self.D1, "D2": self.D2, "D3": self.D3, "D4": self.D4,
            "D5": self.D5, "G": self.G, "H": self.H, "K": self.K,
        }

    def signs(self) -> dict[str, int]:
        return {k: sign(v) for k, v in self.as_dict().items()}


@dataclass(frozen=True)
class QuarticReport:
    coeffs: QuarticCoeffs
    config: QuarticConfig
    complex_config: QuarticComplexConfig
    invariants: QuarticInvariants
    double_root: Optional[Fraction] = None
    leftover_quadratic: Optional[Poly] = None
    triple_root: Optional[Fraction] = None
    single_root: Optional[Fraction] = None
    quadruple_root: Optional[Fraction] = None
    double_pair_quadratic: Optional[Poly] = None


def _coeffs(c) -> QuarticCoeffs:
    if isinstance(c, QuarticCoeffs):
        return c
    if isinstance(c, Poly):
        return QuarticCoeffs.from_poly(c)
    return QuarticCoeffs.of(*c)


def quartic_discriminant(p, q, r, s) -> Fraction:
    return (
        18 * p**3 * r * q * s - 4 * q**3 * p**2 * s + 144 * s * r**2 * q + q**2 * p**2 * r**2
        - 192 * p * r * s**2 + 144 * q * p**2 * s**2 + 18 * p * r**3 * q - 4 * p**3 * r**3
        - 128 * q**2 * s**2 + 16 * q**4 * s - 4 * q**3 * r**2 - 27 * p**4 * s**2
        - 80 * p * r * q**2 * s - 6 * p**2 * r**2 * s + 256 * s**3 - 27 * r**4
    )


def _d1(p, q, r, s) -> Fraction:
    return (
        p**2 * q**2 - 3 * r * p**3 - 6 * p**2 * s - 4 * q**3
        + 14 * p * q * r + 16 * s * q - 18 * r**2
    )


def _double_root_numerator(p, q, r, s) -> Fraction:
    # double root = this / (2 * D1)
    return (
        -3 * p * r**2 + 4 * q**2 * r + 9 * s * p**3
        - p**2 * r * q - 32 * s * p * q + 48 * s * r
    )


def quartic_invariants(c) -> QuarticInvariants:
    p, q, r, s = _coeffs(c)
    D1 = _d1(p, q, r, s)
    N = _double_root_numerator(p, q, r, s)
    H = p**3 - 4 * p * q + 8 * r
    Q = 27 * r * p**3 - 9 * p**2 * q**2 - 108 * p * q * r + 32 * q**3 + 108 * r**2
    return QuarticInvariants(
        D=quartic_discriminant(p, q, r, s),
        D1=D1,
        # 2*D1^2 times the leftover quadratic's constant 6d^2 + 3pd + q, d = N/(2*D1)
        D2=3 * N**2 + 3 * p * N * D1 + 2 * q * D1**2,
        D3=H * (q**2 - 3 * p * r + 12 * s),
        D4=H * Q,
        D5=(
            -Fraction(27, 64) * p**3 * r + Fraction(9, 64) * p**2 * q**2
            + Fraction(27, 16) * p * q * r - Fraction(27, 16) * r**2 - Fraction(1, 2) * q**3
        ),
        G=3 * p**2 - 8 * q,
        H=H,
        K=p**4 - 256 * s,
    )


def table_matches(inv: QuarticInvariants) -> list[QuarticConfig]:
    """Every row of the real-configuration table whose conditions hold.

    Written as a literal transcription of the table, independently of the
    nested dispatch in :func:`classify_quartic`; exactly one row should match.
    """
    D, D1, D2, D3, G, H = inv.D, inv.D1, inv.D2, inv.D3, inv.G, inv.H
    rows = {
        QuarticConfig.FOUR_DISTINCT_REAL: G > 0 and D1 > 0 and D > 0,
        QuarticConfig.TWO_REAL_TWO_COMPLEX: D < 0,
        QuarticConfig.FOUR_COMPLEX: D > 0 and (G <= 0 or D1 <= 0),
        QuarticConfig.SINGLE_DOUBLE_SINGLE: D == 0 and D1 > 0 and D2 < 0,
        QuarticConfig.DOUBLE_BELOW_BOTH: D == 0 and D1 > 0 and D2 > 0 and D3 < 0,
        QuarticConfig.DOUBLE_ABOVE_BOTH: D == 0 and D1 > 0 and D2 > 0 and D3 > 0,
        QuarticConfig.DOUBLE_COMPLEX_PAIR: D == 0 and D1 < 0,
        QuarticConfig.TWO_REAL_DOUBLES: D == 0 and D1 == 0 and G > 0 and H == 0,
        QuarticConfig.TWO_COMPLEX_DOUBLES: D == 0 and D1 == 0 and G < 0,
        QuarticConfig.TRIPLE_BELOW: D == 0 and D1 == 0 and G > 0 and H < 0,
        QuarticConfig.TRIPLE_ABOVE: D == 0 and D1 == 0 and G > 0 and H > 0,
        QuarticConfig.QUADRUPLE: D == 0 and D1 == 0 and G == 0,
    }
    return [cfg for cfg, hit in rows.items() if hit]


def quartic_double_root(c) -> Fraction:
    p, q, r, s = c = _coeffs(c)
    D1 = _d1(p, q, r, s)
    if D1 == 0 or quartic_discriminant(p, q, r, s) != 0:
        raise NotInDoubleCase("needs D = 0 and D1 != 0")
    return _double_root_numerator(p, q, r, s) / (2 * D1)


def leftover_quadratic(c) -> Poly:
    """Monic quadratic in y whose roots are the simple roots minus the double root."""
    c = _coeffs(c)
    d = quartic_double_root(c)
    shifted = c.poly().translate(d)
    quad, rem = shifted.div_rem(Poly([0, 0, 1]))
    if not rem.is_zero():
        raise InternalInconsistency(f"y^2 does not divide the shifted quartic at {c}")
    return quad


def quartic_triple_and_single(c) -> tuple[Fraction, Fraction]:
    c = _coeffs(c)
    inv = quartic_invariants(c)
    if not (inv.D == 0 and inv.D1 == 0 and inv.G > 0 and inv.H != 0):
        raise NotInTripleCase("needs D = 0, D1 = 0, 3p^2 - 8q > 0, p^3 - 4pq + 8r != 0")
    p, q, r, _ = c
    triple = (-p * q + 6 * r) / inv.G
    single = triple - 3 * inv.H / inv.G
    return triple, single


def quartic_double_pair(c) -> Poly:
    """The monic quadratic g with f = g^2 in the two-double-roots cases."""
    c = _coeffs(c)
    inv = quartic_invariants(c)
    if not (inv.D == 0 and inv.D1 == 0 and inv.G != 0 and inv.H == 0):
        raise NotInTwoDoubleCase("needs D = 0, D1 = 0, 3p^2 - 8q != 0, p^3 - 4pq + 8r = 0")
    p, q, _, _ = c
    g = Poly([(q - p**2 / 4) / 2, p / 2, 1])
    if g * g != c.poly():
        raise InternalInconsistency(f"quartic is not a perfect square at {c}")
    return g


def quadruple_root(c) -> Fraction:
    c = _coeffs(c)
    inv = quartic_invariants(c)
    if not (inv.D == 0 and inv.D1 == 0 and inv.G == 0):
        raise NotQuadruple("needs D = 0, D1 = 0, 3p^2 - 8q = 0")
    root = -c.p / 4
    if Poly.from_roots([(root, 4)]) != c.poly():
        raise InternalInconsistency(f"quartic is not a fourth power at {c}")
    return root


def quartic_complex_configuration(c) -> QuarticComplexConfig:
    inv = c if isinstance(c, QuarticInvariants) else quartic_invariants(c)
    if inv.D != 0:
        return QuarticComplexConfig.FOUR_DISTINCT
    if inv.D1 != 0:
        return QuarticComplexConfig.DOUBLE_TWO_SINGLES
    if inv.G == 0:
        return QuarticComplexConfig.QUADRUPLE
    if inv.H == 0:
        return QuarticComplexConfig.TWO_DOUBLES
    return QuarticComplexConfig.TRIPLE_SINGLE


def classify_quartic(c) -> QuarticReport:
    c = _coeffs(c)
    inv = quartic_invariants(c)
    cx = quartic_complex_configuration(inv)
    extra: dict = {}
    D, D1, G, H = inv.D, inv.D1, inv.G, inv.H

    if D > 0:
        config = QuarticConfig.FOUR_DISTINCT_REAL if G > 0 and D1 > 0 else QuarticConfig.FOUR_COMPLEX
    elif D < 0:
        config = QuarticConfig.TWO_REAL_TWO_COMPLEX
    elif D1 != 0:
        extra["double_root"] = quartic_double_root(c)
        extra["leftover_quadratic"] = leftover_quadratic(c)
        if D1 < 0:
            config = QuarticConfig.DOUBLE_COMPLEX_PAIR
        elif inv.D2 < 0:
            config = QuarticConfig.SINGLE_DOUBLE_SINGLE
        elif inv.D2 > 0 and inv.D3 < 0:
            config = QuarticConfig.DOUBLE_BELOW_BOTH
        elif inv.D2 > 0 and inv.D3 > 0:
            config = QuarticConfig.DOUBLE_ABOVE_BOTH
        else:
            raise InternalInconsistency(f"D = 0, D1 > 0 but D2 = {inv.D2}, D3 = {inv.D3} at {c}")
    elif G > 0:
        if H == 0:
            config = QuarticConfig.TWO_REAL_DOUBLES
            extra["double_pair_quadratic"] = quartic_double_pair(c)
        else:
            config = QuarticConfig.TRIPLE_BELOW if H < 0 else QuarticConfig.TRIPLE_ABOVE
            extra["triple_root"], extra["single_root"] = quartic_triple_and_single(c)
    elif G < 0:
        config = QuarticConfig.TWO_COMPLEX_DOUBLES
        extra["double_pair_quadratic"] = quartic_double_pair(c)
    else:
        config = QuarticConfig.QUADRUPLE
        extra["quadruple_root"] = quadruple_root(c)

    return QuarticReport(coeffs=c, config=config, complex_config=cx, invariants=inv, **extra)
