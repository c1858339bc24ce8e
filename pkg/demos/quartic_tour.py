"""
A tour of the quartic classifier
================================

Twelve configurations, told apart by the discriminant D and a handful of
further polynomials in (p, q, r, s).
"""

from rootconfig import Poly, QuarticConfig, classify_quartic

quad = Poly([1, 0, 1])  # x^2 + 1, a complex pair

examples = [
    Poly.from_roots([(1, 1), (2, 1), (3, 1), (4, 1)]),
    Poly.from_roots([(-1, 1), (1, 1)]) * quad,
    quad * Poly([2, 1, 1]),
    Poly.from_roots([(1, 1), (2, 2), (3, 1)]),
    Poly.from_roots([(1, 2), (2, 1), (3, 1)]),
    Poly.from_roots([(1, 1), (2, 1), (3, 2)]),
    Poly.from_roots([(1, 2)]) * quad,
    Poly.from_roots([(-1, 2), (1, 2)]),
    quad * quad,
    Poly.from_roots([(0, 3), (1, 1)]),
    Poly.from_roots([(0, 1), (1, 3)]),
    Poly.from_roots([(2, 4)]),
]

seen = set()
for f in examples:
    rep = classify_quartic(f)
    seen.add(rep.config)
    inv = rep.invariants
    print(f"{rep.config.case:3s} {rep.config.label:42s} D={inv.D}  D1={inv.D1}  G={inv.G}")
assert seen == set(QuarticConfig)

# A double root with two simple ones.  Shifting the double root to 0 leaves
# y^2 times a quadratic, and that quadratic says where the other two roots are.
rep = classify_quartic((-7, 17, -17, 6))
print("\n(x-1)^2 (x-2) (x-3)")
print("double root", rep.double_root)
print("leftover quadratic", rep.leftover_quadratic.format("y"))
print("its constant term is positive: both simple roots on one side")
print("its y coefficient is negative: that side is above ->", rep.config.label)

# Two double roots are reported as the quadratic whose square is f.
rep = classify_quartic(Poly.from_roots([(-1, 2), (1, 2)]))
print("\nsquare root of f:", rep.double_pair_quadratic)
