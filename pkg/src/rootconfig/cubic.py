"""Root configuration of the monic cubic x^3 + p x^2 + q x + r from sign conditions.

Witnesses:

* ``D`` discriminant, ``-4q^3 + p^2 q^2 + 18pqr - 4p^3 r - 27r^2``
* ``P = p^2 - 3q`` (leading coefficient of the degree-1 Sturm element, up to 2/9)
* ``E = 27r - 9pq + 2p^3``
* ``T = p^3 - 27r``

For a double root d and single root e one has P = (d - e)^2 and E = 2(d - e)^3,
so E / (2P) = d - e.  A negative value therefore puts the single root to the
right of the double root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import InternalInconsistency, NotInDoubleCase, NotSquarefree, ZeroIsRoot
from .poly import Poly, RatLike, rat, sign
from .sturm import count_positive_real_roots


class CubicCoeffs(NamedTuple):
    p: Fraction
    q: Fraction
    r: Fraction

    @classmethod
    def of(cls, p: RatLike, q: RatLike, r: RatLike) -> "CubicCoeffs":
        return cls(rat(p), rat(q), rat(r))

    @classmethod
    def from_poly(cls, f: Poly) -> "CubicCoeffs":
        if f.degree != 3:
            raise ValueError(f"expected a cubic, got degree {f.degree}")
        return cls(*f.monicize().lower_coeffs())

    def poly(self) -> Poly:
        return Poly.monic(*self)


class CubicConfig(enum.Enum):
    THREE_DISTINCT_REAL = ("three_distinct_real", "1")
    ONE_REAL_TWO_COMPLEX = ("one_real_two_complex", "2")
    SINGLE_ABOVE_DOUBLE = ("double_single/single_above", "3a")
    SINGLE_BELOW_DOUBLE = ("double_single/single_below", "3b")
    TRIPLE = ("triple", "4")

    def __init__(self, label: str, case: str):
        self.label = label
        self.case = case

    @property
    def distinct_real_roots(self) -> int:
        return _CUBIC_REAL_COUNT[self]

    @classmethod
    def from_label(cls, label: str) -> "CubicConfig":
        label = label.removeprefix("cubic/")
        for member in cls:
            if member.label == label or member.case == label:
                return member
        raise ValueError(f"unknown cubic label {label!r}")


_CUBIC_REAL_COUNT = {
    CubicConfig.THREE_DISTINCT_REAL: 3,
    CubicConfig.ONE_REAL_TWO_COMPLEX: 1,
    CubicConfig.SINGLE_ABOVE_DOUBLE: 2,
    CubicConfig.SINGLE_BELOW_DOUBLE: 2,
    CubicConfig.TRIPLE: 1,
}


class CubicComplexConfig(enum.Enum):
    THREE_DISTINCT = "three_distinct"
    DOUBLE_AND_SINGLE = "double_single"
    TRIPLE = "triple"


@dataclass(frozen=True)
class CubicInvariants:
    D: Fraction
    P: Fraction
    E: Fraction
    T: Fraction

    def signs(self) -> dict[str, int]:
        return {k: sign(v) for k, v in self.as_dict().items()}

    def as_dict(self) -> dict[str, Fraction]:
        return {"D": self.D, "P": self.P, "E": self.E, "T": self.T}


@dataclass(frozen=True)
class CubicReport:
    coeffs: CubicCoeffs
    config: CubicConfig
    complex_config: CubicComplexConfig
    invariants: CubicInvariants
    double_root: Optional[Fraction] = None
    single_root: Optional[Fraction] = None
    triple_root: Optional[Fraction] = None
    single_root_offset: Optional[Fraction] = None
    positive_single_count: Optional[int] = None


def _coeffs(c) -> CubicCoeffs:
    if isinstance(c, CubicCoeffs):
        return c
    if isinstance(c, Poly):
        return CubicCoeffs.from_poly(c)
    return CubicCoeffs.of(*c)


def cubic_discriminant(p: Fraction, q: Fraction, r: Fraction) -> Fraction:
    return -4 * q**3 + p**2 * q**2 + 18 * r * p * q - 4 * r * p**3 - 27 * r**2


def cubic_invariants(c) -> CubicInvariants:
    p, q, r = _coeffs(c)
    return CubicInvariants(
        D=cubic_discriminant(p, q, r),
        P=p**2 - 3 * q,
        E=27 * r - 9 * p * q + 2 * p**3,
        T=p**3 - 27 * r,
    )


def _require_double(inv: CubicInvariants) -> None:
    if inv.D != 0 or inv.P == 0:
        raise NotInDoubleCase(f"needs D = 0 and p^2 - 3q != 0 (D={inv.D}, P={inv.P})")


def cubic_double_root(c) -> Fraction:
    c = _coeffs(c)
    inv = cubic_invariants(c)
    _require_double(inv)
    p, q, r = c
    return (9 * r - p * q) / (2 * inv.P)


def cubic_single_root_offset(c) -> Fraction:
    """E / (2P), which equals double root minus single root."""
    inv = cubic_invariants(c)
    _require_double(inv)
    return inv.E / (2 * inv.P)


def cubic_positive_single_count(c) -> int:
    """Number of positive roots when all roots are simple and r != 0.

    Uses the sign table on (q, r, pq - 9r); where one of those is zero in the
    three-real case the table is silent and the Sturm count is used instead.
    """
    c = _coeffs(c)
    p, q, r = c
    inv = cubic_invariants(c)
    if r == 0:
        raise ZeroIsRoot("r = 0 makes 0 a root")
    if inv.D == 0:
        raise NotSquarefree("D = 0: the cubic has a repeated root")
    if inv.D < 0:
        return 0 if r > 0 else 1
    w = p * q - 9 * r
    if q == 0 or w == 0:
        return count_positive_real_roots(c.poly())
    if q > 0 and r > 0 and w > 0:
        return 0
    if q > 0 and r < 0 and w < 0:
        return 3
    return 2 if r > 0 else 1


def cubic_complex_configuration(c) -> CubicComplexConfig:
    inv = cubic_invariants(c)
    if inv.D != 0:
        return CubicComplexConfig.THREE_DISTINCT
    if inv.P != 0:
        return CubicComplexConfig.DOUBLE_AND_SINGLE
    return CubicComplexConfig.TRIPLE


def classify_cubic(c) -> CubicReport:
    c = _coeffs(c)
    p, q, r = c
    inv = cubic_invariants(c)
    cx = cubic_complex_configuration(c)
    extra: dict = {}

    if inv.D > 0:
        if inv.P <= 0:
            raise InternalInconsistency(f"D > 0 with p^2 - 3q <= 0 at {c}")
        config = CubicConfig.THREE_DISTINCT_REAL
    elif inv.D < 0:
        config = CubicConfig.ONE_REAL_TWO_COMPLEX
    elif inv.P != 0:
        offset = inv.E / (2 * inv.P)
        if offset == 0:
            raise InternalInconsistency(f"double and single root coincide at {c}")
        double = (9 * r - p * q) / (2 * inv.P)
        single = double - offset
        config = CubicConfig.SINGLE_ABOVE_DOUBLE if offset < 0 else CubicConfig.SINGLE_BELOW_DOUBLE
        extra.update(double_root=double, single_root=single, single_root_offset=offset)
    else:
        config = CubicConfig.TRIPLE
        extra["triple_root"] = -p / 3

    if r != 0:
        if inv.D != 0:
            extra["positive_single_count"] = cubic_positive_single_count(c)
        elif config is CubicConfig.TRIPLE:
            extra["positive_single_count"] = 0
        else:
            extra["positive_single_count"] = int(extra["single_root"] > 0)

    return CubicReport(coeffs=c, config=config, complex_config=cx, invariants=inv, **extra)
