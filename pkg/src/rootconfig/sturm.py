"""Sturm chains and distinct-real-root counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import BadInterval, DegreeTooSmall, EndpointIsRoot, ZeroIsRoot
from .poly import Poly, RatLike, rat, sign

Direction = Union[int, float]


@dataclass(frozen=True)
class SturmChain:
    """f, f', then successive negated remainders, down to the last nonzero one.

    Elements are stored exactly as the division produced them; counting only
    reads signs, so no normalisation is applied.
    """

    elements: tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> Poly:
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    @property
    def degrees(self) -> list[int]:
        return [e.degree for e in self.elements]

    @property
    def last(self) -> Poly:
        return self.elements[-1]

    def signs_at(self, x: RatLike) -> list[int]:
        return [sign(e.eval(x)) for e in self.elements]

    def signs_at_infinity(self, direction: Direction) -> list[int]:
        return signs_at_infinity(self, direction)

    def variations_at(self, x: RatLike) -> int:
        return sign_variations(self.signs_at(x))

    def variations_at_infinity(self, direction: Direction) -> int:
        return sign_variations(signs_at_infinity(self, direction))

    def normalized(self) -> "SturmChain":
        """Each element scaled by 1/|leading coefficient|; for display only."""
        return SturmChain(tuple(e * (1 / abs(e.leading)) for e in self.elements))


def sturm_chain(f: Poly) -> SturmChain:
    if f.degree < 1:
        raise DegreeTooSmall(f"Sturm chain needs degree >= 1, got {f.degree}")
    chain = [f, f.derivative()]
    while True:
        _, rem = chain[-2].div_rem(chain[-1])
        if rem.is_zero():
            break
        chain.append(-rem)
    return SturmChain(tuple(chain))


def sign_variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a * b < 0)


def signs_at_infinity(chain: SturmChain, direction: Direction) -> list[int]:
    """Sign of each chain element at +inf (direction > 0) or -inf (direction < 0)."""
    if direction == 0:
        raise ValueError("direction must be positive or negative")
    out = []
    for e in chain:
        s = sign(e.leading)
        if direction < 0 and e.degree % 2 == 1:
            s = -s
        out.append(s)
    return out


def count_real_roots_interval(f: Poly, a: RatLike, b: RatLike) -> int:
    """Number of distinct real roots of f in the open interval (a, b)."""
    a, b = rat(a), rat(b)
    if not a < b:
        raise BadInterval(f"need a < b, got ({a}, {b})")
    if f.eval(a) == 0 or f.eval(b) == 0:
        raise EndpointIsRoot(f"f vanishes at an endpoint of ({a}, {b})")
    chain = sturm_chain(f)
    return chain.variations_at(a) - chain.variations_at(b)


def count_distinct_real_roots(f: Poly) -> int:
    chain = sturm_chain(f)
    return chain.variations_at_infinity(-1) - chain.variations_at_infinity(+1)


def count_positive_real_roots(f: Poly) -> int:
    """Distinct real roots in (0, +inf)."""
    if f.eval(Fraction(0)) == 0:
        raise ZeroIsRoot("0 is a root; the count from 0 is undefined")
    chain = sturm_chain(f)
    return chain.variations_at(0) - chain.variations_at_infinity(+1)


def gcd_degree(f: Poly) -> int:
    """Degree of gcd(f, f'), read off the last chain element."""
    return sturm_chain(f).last.degree
