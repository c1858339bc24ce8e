"""
A slice through quartic coefficient space
=========================================

Fix p = 0 and r = 0, so f = x^4 + q x^2 + s.  Sampling a grid in (q, s) and
labelling each point draws the strata as a character map.  The curves where
labels change are pieces of D = 0.

The same grid can be exported as CSV with

    rootconfig sample --quartic --box q=-4:4:33 s=-2:6:17
"""

from fractions import Fraction

from rootconfig import Poly, classify_quartic

glyph = {
    "1": "4",   # four real
    "2": "2",   # two real
    "3": ".",   # none real
}

qs = [Fraction(-4) + Fraction(8 * i, 48) for i in range(49)]
ss = [Fraction(6) - Fraction(8 * j, 24) for j in range(25)]

print("     q from -4 (left) to 4 (right)")
for s in ss:
    row = []
    for q in qs:
        case = classify_quartic((0, q, 0, s)).config.case
        row.append(glyph.get(case, "*"))  # * marks a repeated root
    print(f"s={float(s):5.2f} " + "".join(row))

# x^4 + q x^2 + s has four real roots exactly when s > 0, q < 0 and q^2 > 4s.
for q in qs:
    for s in ss:
        four = classify_quartic((0, q, 0, s)).config.case == "1"
        assert four == (s > 0 and q < 0 and q * q > 4 * s)
print("\nfour-real region matches s > 0, q < 0, q^2 > 4s")
