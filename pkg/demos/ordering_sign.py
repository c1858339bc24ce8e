"""
Which side is the single root on?
=================================

For a cubic with a double root d and a single root e, write

    (x - d)^2 (x - e) = x^3 + p x^2 + q x + r.

Expanding gives p^2 - 3q = (d - e)^2 and 27r - 9pq + 2p^3 = 2 (d - e)^3, so

    (27r - 9pq + 2p^3) / (2 (p^2 - 3q)) = d - e.

A negative value means the single root sits ABOVE the double root.  It is easy
to read this the other way round, so here is the check.
"""

from fractions import Fraction

from rootconfig import Poly, classify_cubic, oracle_classify

f = Poly.from_roots([(1, 2), (3, 1)])  # double root 1, single root 3
p, q, r = f.lower_coeffs()
value = (27 * r - 9 * p * q + 2 * p**3) / (2 * (p * p - 3 * q))
print("f =", f)
print("(27r - 9pq + 2p^3) / (2(p^2 - 3q)) =", value)

structure = oracle_classify(f)
print("oracle, left to right:", [m for _, m in structure.real_roots], "(multiplicities)")
print("classifier:", classify_cubic(f).config.label)

# Many more, with rational roots drawn at random.
import random

rng = random.Random(0)
for _ in range(1000):
    d, e = (Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(2))
    if d == e:
        continue
    rep = classify_cubic(Poly.from_roots([(d, 2), (e, 1)]))
    assert rep.single_root_offset == d - e
    assert (rep.config.label == "double_single/single_above") == (e > d)
print("1000 random double/single cubics: sign convention confirmed")
