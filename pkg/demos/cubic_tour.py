"""
A tour of the cubic classifier
==============================

Every monic cubic x^3 + p x^2 + q x + r falls into exactly one of five
configurations.  We walk through one of each and look at the witnesses
that decide it.
"""

from fractions import Fraction

from rootconfig import Poly, classify_cubic, count_distinct_real_roots

# Build each configuration from known roots, so we know the right answer.
examples = {
    "three distinct": Poly.from_roots([(1, 1), (2, 1), (3, 1)]),
    "one real": Poly.from_roots([(2, 1)]) * Poly([1, 0, 1]),
    "double then single": Poly.from_roots([(1, 2), (3, 1)]),
    "single then double": Poly.from_roots([(-1, 1), (2, 2)]),
    "triple": Poly.from_roots([(Fraction(1, 2), 3)]),
}

for name, f in examples.items():
    rep = classify_cubic(f)
    inv = rep.invariants
    print(f"{name:20s} {str(f):30s} -> {rep.config.label}")
    print(f"{'':20s} D={inv.D}  P={inv.P}  E={inv.E}")

# When D = 0 and P != 0 the double root is rational in the coefficients,
# and so is the single one.  No radicals needed.
rep = classify_cubic(examples["double then single"])
print("\ndouble root", rep.double_root, "single root", rep.single_root)
print("offset E/(2P) =", rep.single_root_offset, "(double minus single)")

# The Sturm engine counts distinct real roots independently.
for name, f in examples.items():
    assert count_distinct_real_roots(f) == classify_cubic(f).config.distinct_real_roots

# With three simple roots and r != 0, the signs of p, q, r alone give how
# many roots are positive.
rep = classify_cubic((-6, 11, -6))
print("\nx^3 - 6x^2 + 11x - 6 has", rep.positive_single_count, "positive roots")
