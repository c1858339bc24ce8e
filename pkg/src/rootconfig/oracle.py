"""Ground truth for the classifiers: exact multiplicities plus ordered real roots.

Multiplicities come from a square-free decomposition by repeated gcd.  Real
roots of each square-free factor are isolated with Descartes' rule of signs
on bisected intervals (the Vincent-Collins-Akritas scheme), so this module
shares no counting code with :mod:`rootconfig.sturm`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

from .cubic import CubicConfig
from .errors import NotSquarefree, UnrealizableLabel
from .poly import Poly, RatLike, poly_gcd, exact_quotient, rat, sign
from .quartic import QuarticConfig

Config = Union[CubicConfig, QuarticConfig]


class Interval(NamedTuple):
    """Open interval (lo, hi) holding one root, or the exact root when lo == hi."""

    lo: Fraction
    hi: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        if self.is_point:
            return x == self.lo
        return self.lo < x < self.hi

    def overlaps(self, other: "Interval") -> bool:
        if self.is_point and other.is_point:
            return self.lo == other.lo
        if self.is_point:
            return other.contains(self.lo)
        if other.is_point:
            return self.contains(other.lo)
        return self.lo < other.hi and other.lo < self.hi


# -- square-free decomposition ------------------------------------------------

def squarefree_multiplicity_split(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: f = lc * prod g_i^m_i, g_i monic, square-free, coprime."""
    if f.degree < 1:
        raise ValueError("need a polynomial of positive degree")
    f = f.monicize()
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = exact_quotient(f, a)
    c = exact_quotient(fp, a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = exact_quotient(b, g)
        c = exact_quotient(d, g)
        d = c - b.derivative()
        i += 1
    return out


def is_squarefree(f: Poly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


# -- Descartes bisection on integer polynomials ---------------------------------

def _integer_coeffs(f: Poly) -> list[int]:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _taylor_shift_int(a: list[int], c: int) -> list[int]:
    a = list(a)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return a


def _variations(coeffs: Sequence[int]) -> int:
    nz = [v for v in coeffs if v]
    return sum(1 for u, v in zip(nz, nz[1:]) if (u < 0) != (v < 0))


def _descartes_unit(a: list[int]) -> int:
    """Upper bound (exact when 0 or 1) on the roots of a in (0, 1)."""
    return _variations(_taylor_shift_int(list(reversed(a)), 1))


def _root_bound_pow2(a: list[int]) -> int:
    lead = abs(a[-1])
    cauchy = 1 + max((Fraction(abs(v), lead) for v in a[:-1]), default=Fraction(0))
    k = 0
    while 2**k <= cauchy:
        k += 1
    return 2**k


def _isolate_squarefree(f: Poly) -> list[Interval]:
    a = _integer_coeffs(f)
    n = len(a) - 1
    if n < 1:
        return []
    bound = _root_bound_pow2(a)
    # unit-interval polynomial u(x) = f(-B + 2B x)
    shifted = _taylor_shift_int(a, -bound)
    u = [v * (2 * bound) ** i for i, v in enumerate(shifted)]

    def to_x(c: int, k: int) -> Fraction:
        return Fraction(-bound) + Fraction(2 * bound * c, 2**k)

    found: list[Interval] = []
    stack = [(u, 0, 0)]
    while stack:
        poly, c, k = stack.pop()
        deg = len(poly) - 1
        if deg < 1:
            continue
        v = _descartes_unit(poly)
        if v == 0:
            continue
        if v == 1:
            found.append(Interval(to_x(c, k), to_x(c + 1, k)))
            continue
        left = [coef * 2 ** (deg - i) for i, coef in enumerate(poly)]
        right = _taylor_shift_int(left, 1)
        if right[0] == 0:
            found.append(Interval(to_x(2 * c + 1, k + 1), to_x(2 * c + 1, k + 1)))
            right = right[1:]
        stack.append((left, 2 * c, k + 1))
        stack.append((right, 2 * c + 1, k + 1))
    found.sort(key=lambda iv: iv.lo)
    return found


def _refine(g: Poly, iv: Interval) -> Interval:
    """Halve an isolating interval of the square-free g."""
    if iv.is_point:
        return iv
    mid = (iv.lo + iv.hi) / 2
    sm = sign(g.eval(mid))
    if sm == 0:
        return Interval(mid, mid)
    # lo may itself be a root of g (recorded separately); then g just right of lo has the sign of g'(lo)
    s_lo = sign(g.eval(iv.lo)) or sign(g.derivative().eval(iv.lo))
    if sm == s_lo:
        return Interval(mid, iv.hi)
    return Interval(iv.lo, mid)


def isolate_real_roots(f: Poly, max_width: Optional[RatLike] = None) -> list[Interval]:
    """Disjoint isolating intervals, left to right, for a square-free f."""
    if f.degree < 1:
        return []
    if not is_squarefree(f):
        raise NotSquarefree(f"{f} has a repeated factor")
    out = _isolate_squarefree(f)
    if max_width is not None:
        w = rat(max_width)
        refined = []
        for iv in out:
            while not iv.is_point and iv.width >= w:
                iv = _refine(f, iv)
            refined.append(iv)
        out = refined
    return out


# -- root structure ------------------------------------------------------------

@dataclass(frozen=True)
class RootStructure:
    degree: int
    real_roots: tuple[tuple[Interval, int], ...]
    complex_pairs: tuple[tuple[int, int], ...] = field(default=())  # (multiplicity, count)

    @property
    def complex_pair_count_by_multiplicity(self) -> dict[int, int]:
        return dict(self.complex_pairs)

    @property
    def multiplicity_pattern(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.real_roots)

    @property
    def distinct_real_count(self) -> int:
        return len(self.real_roots)

    @property
    def signature(self) -> tuple:
        return (self.multiplicity_pattern, self.complex_pairs)

    def degree_accounted(self) -> bool:
        real = sum(self.multiplicity_pattern)
        cx = sum(2 * m * n for m, n in self.complex_pairs)
        return real + cx == self.degree

    def consistent_with(self, other: "RootStructure") -> bool:
        """Same signature, and each root interval of one meets the matching one of the other."""
        if self.signature != other.signature:
            return False
        return all(a.overlaps(b) for (a, _), (b, _) in zip(self.real_roots, other.real_roots))


def oracle_classify(f: Poly) -> RootStructure:
    parts = squarefree_multiplicity_split(f)
    tagged: list[tuple[Interval, int, Poly]] = []
    pairs: dict[int, int] = {}
    for g, m in parts:
        ivs = _isolate_squarefree(g)
        tagged.extend((iv, m, g) for iv in ivs)
        nonreal = g.degree - len(ivs)
        if nonreal:
            pairs[m] = pairs.get(m, 0) + nonreal // 2

    # factors are coprime, so refining eventually separates every pair
    while True:
        tagged.sort(key=lambda t: (t[0].lo, t[0].hi))
        clash = None
        for i in range(len(tagged)):
            for j in range(i + 1, len(tagged)):
                if tagged[i][0].overlaps(tagged[j][0]):
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            break
        for idx in clash:
            iv, m, g = tagged[idx]
            tagged[idx] = (_refine(g, iv), m, g)

    return RootStructure(
        degree=f.degree,
        real_roots=tuple((iv, m) for iv, m, _ in tagged),
        complex_pairs=tuple(sorted(pairs.items())),
    )


_RECIPES: dict[Config, tuple[tuple[int, ...], tuple[int, ...]]] = {
    CubicConfig.THREE_DISTINCT_REAL: ((1, 1, 1), ()),
    CubicConfig.ONE_REAL_TWO_COMPLEX: ((1,), (1,)),
    CubicConfig.SINGLE_ABOVE_DOUBLE: ((2, 1), ()),
    CubicConfig.SINGLE_BELOW_DOUBLE: ((1, 2), ()),
    CubicConfig.TRIPLE: ((3,), ()),
    QuarticConfig.FOUR_DISTINCT_REAL: ((1, 1, 1, 1), ()),
    QuarticConfig.TWO_REAL_TWO_COMPLEX: ((1, 1), (1,)),
    QuarticConfig.FOUR_COMPLEX: ((), (1, 1)),
    QuarticConfig.SINGLE_DOUBLE_SINGLE: ((1, 2, 1), ()),
    QuarticConfig.DOUBLE_BELOW_BOTH: ((2, 1, 1), ()),
    QuarticConfig.DOUBLE_ABOVE_BOTH: ((1, 1, 2), ()),
    QuarticConfig.DOUBLE_COMPLEX_PAIR: ((2,), (1,)),
    QuarticConfig.TWO_REAL_DOUBLES: ((2, 2), ()),
    QuarticConfig.TWO_COMPLEX_DOUBLES: ((), (2,)),
    QuarticConfig.TRIPLE_BELOW: ((3, 1), ()),
    QuarticConfig.TRIPLE_ABOVE: ((1, 3), ()),
    QuarticConfig.QUADRUPLE: ((4,), ()),
}



def _pair_signature(cx: Sequence[int]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for m in cx:
        counts[m] = counts.get(m, 0) + 1
    return tuple(sorted(counts.items()))


def _degree_of(cfg: Config) -> int:
    return 3 if isinstance(cfg, CubicConfig) else 4


_BY_SIGNATURE = {
    (_degree_of(cfg), real, _pair_signature(cx)): cfg for cfg, (real, cx) in _RECIPES.items()
}

ALL_CONFIGS: tuple[Config, ...] = tuple(_RECIPES)


def structure_config(rs: RootStructure) -> Config:
    """The cubic or quartic configuration a root structure realises."""
    try:
        return _BY_SIGNATURE[(rs.degree, rs.multiplicity_pattern, rs.complex_pairs)]
    except KeyError:
        raise ValueError(f"no cubic/quartic configuration has signature {rs.signature}") from None


def parse_config(label: Union[str, Config]) -> Config:
    """Accept an enum member or a label such as "quartic/4b" or "cubic/triple"."""
    if isinstance(label, (CubicConfig, QuarticConfig)):
        return label
    if label.startswith("cubic/"):
        return CubicConfig.from_label(label)
    if label.startswith("quartic/"):
        return QuarticConfig.from_label(label)
    hits = []
    for enum_cls in (CubicConfig, QuarticConfig):
        try:
            hits.append(enum_cls.from_label(label))
        except ValueError:
            pass
    if len(hits) != 1:
        raise ValueError(f"ambiguous or unknown configuration label {label!r}")
    return hits[0]


def full_label(cfg: Config) -> str:
    return ("cubic/" if isinstance(cfg, CubicConfig) else "quartic/") + cfg.label


# -- labelled instance generation ------------------------------------------------

def random_rational(rng: random.Random, max_num: int = 50, max_den: int = 50) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def _distinct_rationals(rng: random.Random, k: int) -> list[Fraction]:
    out: set[Fraction] = set()
    while len(out) < k:
        out.add(Fraction(rng.randint(-20, 20), rng.randint(1, 5)))
    return sorted(out)


def _complex_quadratic(rng: random.Random) -> Poly:
    b = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
    c = b * b / 4 + Fraction(rng.randint(1, 20), rng.randint(1, 5))
    return Poly([c, b, 1])


def _irrational_quadratic(rng: random.Random) -> tuple[Poly, Interval, Interval]:
    """x^2 + bx + c with two irrational real roots, plus bracketing intervals."""
    while True:
        b = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
        disc = Fraction(rng.randint(1, 60), rng.randint(1, 5))
        n, d = disc.numerator, disc.denominator
        k = math.isqrt(n * d)
        if k * k != n * d:
            break
    # sqrt(disc) lies strictly between k/d and (k+1)/d
    lo_s, hi_s = Fraction(k, d), Fraction(k + 1, d)
    c = (b * b - disc) / 4
    left = Interval((-b - hi_s) / 2, (-b - lo_s) / 2)
    right = Interval((-b + lo_s) / 2, (-b + hi_s) / 2)
    return Poly([c, b, 1]), left, right


def _expected(degree: int, reals: list[tuple[Interval, int]], cx: Sequence[int]) -> RootStructure:
    return RootStructure(degree=degree, real_roots=tuple(reals), complex_pairs=_pair_signature(cx))


def _point(x: Fraction) -> Interval:
    return Interval(x, x)


def _sample_rational(cfg: Config, rng: random.Random) -> tuple[Poly, RootStructure]:
    real, cx = _RECIPES[cfg]
    roots = _distinct_rationals(rng, len(real))
    f = Poly.from_roots(list(zip(roots, real)))
    quads: list[Poly] = []
    while len(quads) < len(cx):
        g = _complex_quadratic(rng)
        if g not in quads:
            quads.append(g)
    for g, m in zip(quads, cx):
        f = f * g**m
    return f, _expected(_degree_of(cfg), [(_point(x), m) for x, m in zip(roots, real)], cx)


def _sample_irrational(cfg: Config, rng: random.Random) -> Optional[tuple[Poly, RootStructure]]:
    """Variants whose simple real roots (or doubles, for case 6) are irrational."""
    Q = QuarticConfig
    if cfg not in (Q.FOUR_DISTINCT_REAL, Q.TWO_REAL_TWO_COMPLEX, Q.SINGLE_DOUBLE_SINGLE,
                   Q.DOUBLE_BELOW_BOTH, Q.DOUBLE_ABOVE_BOTH, Q.TWO_REAL_DOUBLES,
                   CubicConfig.THREE_DISTINCT_REAL):
        return None
    g, left, right = _irrational_quadratic(rng)
    if cfg is Q.TWO_REAL_DOUBLES:
        return g * g, _expected(4, [(left, 2), (right, 2)], ())
    if cfg is Q.TWO_REAL_TWO_COMPLEX:
        h = _complex_quadratic(rng)
        return g * h, _expected(4, [(left, 1), (right, 1)], (1,))
    span = right.hi - left.lo
    if cfg is Q.SINGLE_DOUBLE_SINGLE:
        a = (left.hi + right.lo) / 2
        reals = [(left, 1), (_point(a), 2), (right, 1)]
        mult = 2
    elif cfg in (Q.DOUBLE_BELOW_BOTH, Q.DOUBLE_ABOVE_BOTH):
        gap = span * Fraction(rng.randint(1, 8), 4)
        if cfg is Q.DOUBLE_BELOW_BOTH:
            a = left.lo - gap
            reals = [(_point(a), 2), (left, 1), (right, 1)]
        else:
            a = right.hi + gap
            reals = [(left, 1), (right, 1), (_point(a), 2)]
        mult = 2
    elif cfg is CubicConfig.THREE_DISTINCT_REAL:
        a = left.lo - span * Fraction(rng.randint(1, 8), 4) if rng.random() < 0.5 else right.hi + span
        reals = sorted([(left, 1), (right, 1), (_point(a), 1)], key=lambda t: t[0].lo)
        mult = 1
    else:  # four distinct real: two rationals outside the irrational pair
        below = left.lo - span * Fraction(rng.randint(1, 4), 4)
        above = right.hi + span * Fraction(rng.randint(1, 4), 4)
        f = g * Poly.from_roots([(below, 1), (above, 1)])
        return f, _expected(4, [(_point(below), 1), (left, 1), (right, 1), (_point(above), 1)], ())
    f = g * Poly.from_roots([(a, mult)])
    return f, _expected(_degree_of(cfg), reals, ())


def sample_labeled_instances(
    label: Union[str, Config], count: int, seed: int, irrational: bool = False
) -> list[tuple[Poly, RootStructure]]:
    """Deterministic monic polynomials realising ``label`` with their known structure.

    Real roots are small distinct rationals, complex pairs come from rational
    quadratics with negative discriminant.  With ``irrational=True`` the labels
    that allow it use a quadratic factor with irrational real roots instead,
    and the expected structure carries bracketing intervals for those roots.
    """
    cfg = parse_config(label)
    if count < 0:
        raise UnrealizableLabel("count must be non-negative")
    real, cx = _RECIPES[cfg]
    if sum(real) + 2 * sum(cx) != _degree_of(cfg):
        raise UnrealizableLabel(f"recipe for {cfg} does not match its degree")
    rng = random.Random(f"{full_label(cfg)}:{seed}")
    out = []
    for _ in range(count):
        sample = _sample_irrational(cfg, rng) if irrational else None
        if sample is None:
            sample = _sample_rational(cfg, rng)
        out.append(sample)
    return out
