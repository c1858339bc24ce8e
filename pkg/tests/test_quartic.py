import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rootconfig.errors import NotInDoubleCase, NotInTripleCase, NotInTwoDoubleCase, NotQuadruple
from rootconfig.oracle import oracle_classify, sample_labeled_instances, structure_config
from rootconfig.poly import Poly
from rootconfig.quartic import (
    QuarticCoeffs,
    QuarticComplexConfig,
    QuarticConfig,
    classify_quartic,
    leftover_quadratic,
    quadruple_root,
    quartic_complex_configuration,
    quartic_double_pair,
    quartic_double_root,
    quartic_invariants,
    quartic_triple_and_single,
    table_matches,
)
from rootconfig.sturm import count_distinct_real_roots
from printed_forms import long_d2, long_gcddeg0_numerator, long_quartic_discriminant
from strategies import rationals

Q = QuarticConfig


def root_discriminant(roots):
    out = F(1)
    for a, b in itertools.combinations(roots, 2):
        out *= (a - b) ** 2
    return out


coeffs4 = st.tuples(rationals(), rationals(), rationals(), rationals())


class TestInvariants:
    def test_four_distinct_roots(self):
        inv = quartic_invariants((-10, 35, -50, 24))
        assert inv.D == root_discriminant([1, 2, 3, 4]) == 144
        assert inv.D1 == 40
        assert inv.G == 20

    def test_x4_plus_1(self):
        inv = quartic_invariants((0, 0, 0, 1))
        assert (inv.D, inv.G) == (256, 0)

    def test_x4(self):
        inv = quartic_invariants((0, 0, 0, 0))
        assert all(v == 0 for v in inv.as_dict().values())

    @given(st.lists(rationals(10, 4), min_size=4, max_size=4))
    def test_discriminant_is_root_product(self, roots):
        f = Poly.from_roots([(x, 1) for x in roots])
        assert quartic_invariants(f).D == root_discriminant(roots)

    @settings(max_examples=200)
    @given(coeffs4)
    def test_d2_is_the_long_polynomial(self, c):
        assert quartic_invariants(c).D2 == long_d2(*c)

    @settings(max_examples=200)
    @given(coeffs4)
    def test_discriminant_long_form(self, c):
        assert quartic_invariants(c).D == long_quartic_discriminant(*c)

    @settings(max_examples=200)
    @given(coeffs4)
    def test_last_remainder_numerator(self, c):
        inv = quartic_invariants(c)
        assert long_gcddeg0_numerator(*c) == inv.G**2 * inv.D

    @given(coeffs4)
    def test_d4_d5_relation(self, c):
        inv = quartic_invariants(c)
        assert inv.D4 == -64 * inv.H * inv.D5

    @given(rationals(), rationals(), rationals())
    def test_g_zero_slices(self, p, r, s):
        q = 3 * p * p / 8
        assert quartic_invariants((p, q, r, s)).D1 == -F(9, 128) * (p**3 - 16 * r) ** 2
        assert quartic_invariants((p, q, p**3 / 16, s)).D == -F(1, 65536) * (p**4 - 256 * s) ** 3

    @given(coeffs4)
    def test_d3_factorisation(self, c):
        p, q, r, s = c
        inv = quartic_invariants(c)
        assert inv.D3 == -inv.H * (3 * p * r - 12 * s - q * q)


class TestClassify:
    @pytest.mark.parametrize(
        "coeffs, config",
        [
            ((-10, 35, -50, 24), Q.FOUR_DISTINCT_REAL),
            ((0, 0, 0, -1), Q.TWO_REAL_TWO_COMPLEX),
            ((0, 0, 0, 1), Q.FOUR_COMPLEX),
            ((-7, 17, -17, 6), Q.DOUBLE_BELOW_BOTH),
            ((-8, 23, -28, 12), Q.SINGLE_DOUBLE_SINGLE),
            ((0, -2, 0, 1), Q.TWO_REAL_DOUBLES),
            ((0, 2, 0, 1), Q.TWO_COMPLEX_DOUBLES),
            ((-1, 0, 0, 0), Q.TRIPLE_BELOW),
            ((0, 0, 0, 0), Q.QUADRUPLE),
        ],
    )
    def test_examples(self, coeffs, config):
        assert classify_quartic(coeffs).config is config

    def test_case_4b_witnesses(self):
        inv = quartic_invariants((-7, 17, -17, 6))
        assert (inv.D, inv.D1, inv.D3) == (0, 4, -12)
        assert inv.D2 > 0

    def test_case_4c(self):
        f = Poly.from_roots([(1, 1), (2, 1), (3, 2)])
        rep = classify_quartic(f)
        assert rep.config is Q.DOUBLE_ABOVE_BOTH and rep.double_root == 3

    def test_report_fields(self):
        rep = classify_quartic((0, 0, 0, 0))
        assert rep.quadruple_root == 0 and rep.double_root is None
        rep = classify_quartic((-1, 0, 0, 0))
        assert (rep.triple_root, rep.single_root) == (0, 1)
        rep = classify_quartic((0, -2, 0, 1))
        assert rep.double_pair_quadratic == Poly([-1, 0, 1])

    def test_labels(self):
        assert Q.DOUBLE_BELOW_BOTH.label == "double_two_singles/double_below_both"
        assert Q.DOUBLE_BELOW_BOTH.case == "4b"
        for cfg in Q:
            assert Q.from_label(cfg.label) is cfg
            assert Q.from_label("quartic/" + cfg.case) is cfg

    @settings(max_examples=300, deadline=None)
    @given(coeffs4)
    def test_exactly_one_row_and_agreement(self, c):
        inv = quartic_invariants(c)
        rep = classify_quartic(c)
        assert table_matches(inv) == [rep.config]
        f = QuarticCoeffs.of(*c).poly()
        assert count_distinct_real_roots(f) == rep.config.distinct_real_roots

    @pytest.mark.parametrize("cfg", list(Q))
    def test_one_row_on_strata(self, cfg):
        for f, _ in sample_labeled_instances(cfg, 25, seed=11):
            assert table_matches(quartic_invariants(f)) == [cfg]

    @pytest.mark.parametrize("cfg", list(Q))
    def test_mirror_symmetry(self, cfg):
        swap = {
            Q.DOUBLE_BELOW_BOTH: Q.DOUBLE_ABOVE_BOTH,
            Q.DOUBLE_ABOVE_BOTH: Q.DOUBLE_BELOW_BOTH,
            Q.TRIPLE_BELOW: Q.TRIPLE_ABOVE,
            Q.TRIPLE_ABOVE: Q.TRIPLE_BELOW,
        }
        for f, _ in sample_labeled_instances(cfg, 20, seed=3, irrational=True):
            mirrored = QuarticCoeffs.from_poly(f).mirrored()
            assert classify_quartic(mirrored).config is swap.get(cfg, cfg)

    @given(coeffs4)
    def test_mirror_symmetry_random(self, c):
        a = classify_quartic(c).config
        b = classify_quartic(QuarticCoeffs.of(*c).mirrored()).config
        swap = {Q.DOUBLE_BELOW_BOTH: Q.DOUBLE_ABOVE_BOTH, Q.DOUBLE_ABOVE_BOTH: Q.DOUBLE_BELOW_BOTH,
                Q.TRIPLE_BELOW: Q.TRIPLE_ABOVE, Q.TRIPLE_ABOVE: Q.TRIPLE_BELOW}
        assert b is swap.get(a, a)

    def test_boundary_d1_zero_with_positive_g(self):
        # D1 is linear in s, so each (p, q, r) has one s on D1 = 0; there D is never positive
        rng = random.Random(9)
        checked = 0
        while checked < 300:
            p, q, r = (F(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(3))
            denom = 16 * q - 6 * p * p
            if denom == 0:
                continue
            s = -(p * p * q * q - 3 * r * p**3 - 4 * q**3 + 14 * p * q * r - 18 * r * r) / denom
            inv = quartic_invariants((p, q, r, s))
            assert inv.D1 == 0
            if inv.G > 0:
                assert inv.D <= 0
            got = classify_quartic((p, q, r, s)).config
            assert got is structure_config(oracle_classify(Poly.monic(p, q, r, s)))
            checked += 1

    @given(rationals(), rationals(), rationals())
    def test_no_four_real_on_g_zero_slice(self, p, r, s):
        assert classify_quartic((p, 3 * p * p / 8, r, s)).config is not Q.FOUR_DISTINCT_REAL


class TestDoubleRoot:
    def test_examples(self):
        assert quartic_double_root((-7, 17, -17, 6)) == 1
        assert quartic_double_root((-8, 23, -28, 12)) == 2

    def test_gate(self):
        with pytest.raises(NotInDoubleCase):
            quartic_double_root((0, 2, 0, 1))
        with pytest.raises(NotInDoubleCase):
            quartic_double_root((-10, 35, -50, 24))

    def test_leftover_examples(self):
        assert leftover_quadratic((-7, 17, -17, 6)) == Poly([2, -3, 1])
        assert leftover_quadratic((-8, 23, -28, 12)) == Poly([-1, 0, 1])

    def test_leftover_complex_pair(self):
        # (x - 1)^2 (x^2 + 1): simple roots -1 +- i after shifting by the double root 1
        f = Poly.from_roots([(1, 2)]) * Poly([1, 0, 1])
        assert classify_quartic(f).config is Q.DOUBLE_COMPLEX_PAIR
        g = leftover_quadratic(f)
        assert g == Poly([2, 2, 1])
        assert g[1] ** 2 - 4 * g[0] < 0

    @settings(deadline=None)
    @given(st.sampled_from([Q.SINGLE_DOUBLE_SINGLE, Q.DOUBLE_BELOW_BOTH, Q.DOUBLE_ABOVE_BOTH, Q.DOUBLE_COMPLEX_PAIR]),
           st.integers(0, 10**6), st.booleans())
    def test_leftover_semantics(self, cfg, seed, irrational):
        f, _ = sample_labeled_instances(cfg, 1, seed, irrational=irrational)[0]
        inv = quartic_invariants(f)
        g = leftover_quadratic(f)
        sgn = lambda v: (v > 0) - (v < 0)
        assert sgn(g[0]) == sgn(inv.D2)
        assert g[1] == inv.D3 / inv.D1
        assert g[0] * 2 * inv.D1**2 == inv.D2
        d = quartic_double_root(f)
        assert f.eval(d) == 0 and f.derivative().eval(d) == 0


class TestTripleSingle:
    def test_examples(self):
        assert quartic_triple_and_single((-1, 0, 0, 0)) == (0, 1)
        assert quartic_triple_and_single((1, 0, 0, 0)) == (0, -1)

    def test_gate(self):
        with pytest.raises(NotInTripleCase):
            quartic_triple_and_single((-5, 6, 0, 0))
        with pytest.raises(NotInTripleCase):
            quartic_triple_and_single((0, -2, 0, 1))

    @given(st.tuples(rationals(20, 5), rationals(20, 5)).filter(lambda t: t[0] != t[1]))
    def test_recovers_construction(self, ts):
        t, u = ts
        assert quartic_triple_and_single(Poly.from_roots([(t, 3), (u, 1)])) == (t, u)


class TestDoublePair:
    def test_examples(self):
        assert quartic_double_pair((0, -2, 0, 1)) == Poly([-1, 0, 1])
        assert quartic_double_pair((0, 2, 0, 1)) == Poly([1, 0, 1])
        assert quartic_double_pair((-2, 3, -2, 1)) == Poly([1, -1, 1])

    def test_gate(self):
        with pytest.raises(NotInTwoDoubleCase):
            quartic_double_pair((-1, 0, 0, 0))
        with pytest.raises(NotInTwoDoubleCase):
            quartic_double_pair((0, 0, 0, 0))


class TestQuadruple:
    @pytest.mark.parametrize("coeffs, root", [((0, 0, 0, 0), 0), ((-4, 6, -4, 1), 1), ((4, 6, 4, 1), -1)])
    def test_examples(self, coeffs, root):
        assert quadruple_root(coeffs) == root

    def test_gate(self):
        with pytest.raises(NotQuadruple):
            quadruple_root((0, 0, 0, 1))


class TestComplexConfiguration:
    def test_examples(self):
        assert quartic_complex_configuration((0, 0, 0, 1)) is QuarticComplexConfig.FOUR_DISTINCT
        assert quartic_complex_configuration((0, 2, 0, 1)) is QuarticComplexConfig.TWO_DOUBLES
        assert quartic_invariants((0, 2, 0, 1)).H == 0
        assert quartic_complex_configuration((-1, 0, 0, 0)) is QuarticComplexConfig.TRIPLE_SINGLE
        assert quartic_complex_configuration((-7, 17, -17, 6)) is QuarticComplexConfig.DOUBLE_TWO_SINGLES
        assert quartic_complex_configuration((0, 0, 0, 0)) is QuarticComplexConfig.QUADRUPLE

    @pytest.mark.parametrize("cfg", list(Q))
    def test_consistent_with_real_table(self, cfg):
        coarse = {
            Q.FOUR_DISTINCT_REAL: QuarticComplexConfig.FOUR_DISTINCT,
            Q.TWO_REAL_TWO_COMPLEX: QuarticComplexConfig.FOUR_DISTINCT,
            Q.FOUR_COMPLEX: QuarticComplexConfig.FOUR_DISTINCT,
            Q.SINGLE_DOUBLE_SINGLE: QuarticComplexConfig.DOUBLE_TWO_SINGLES,
            Q.DOUBLE_BELOW_BOTH: QuarticComplexConfig.DOUBLE_TWO_SINGLES,
            Q.DOUBLE_ABOVE_BOTH: QuarticComplexConfig.DOUBLE_TWO_SINGLES,
            Q.DOUBLE_COMPLEX_PAIR: QuarticComplexConfig.DOUBLE_TWO_SINGLES,
            Q.TWO_REAL_DOUBLES: QuarticComplexConfig.TWO_DOUBLES,
            Q.TWO_COMPLEX_DOUBLES: QuarticComplexConfig.TWO_DOUBLES,
            Q.TRIPLE_BELOW: QuarticComplexConfig.TRIPLE_SINGLE,
            Q.TRIPLE_ABOVE: QuarticComplexConfig.TRIPLE_SINGLE,
            Q.QUADRUPLE: QuarticComplexConfig.QUADRUPLE,
        }
        for f, _ in sample_labeled_instances(cfg, 10, seed=5):
            assert quartic_complex_configuration(f) is coarse[cfg]
