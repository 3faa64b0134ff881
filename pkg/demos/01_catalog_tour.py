"""A tour of the catalog: the named algebras and their exact tables.

Run with: python3 demos/01_catalog_tour.py
"""

from fractions import Fraction

from axetlab import (emit_algebra_file, make_2B, make_3C, make_3C_skew,
                     make_Q2_third, make_Q2x, make_Q2x_plus_one,
                     make_Q2x_via_radical, skew_examples)
from axetlab.scalars import PrimeField, QQ


def banner(title):
    print()
    print(title)
    print("-" * len(title))


banner("2B: two orthogonal idempotents")
print(emit_algebra_file(make_2B()))

banner("3C(1/4): three axes, every product touches the third point")
A = make_3C(Fraction(1, 4))
x, y, z = A.basis()
print("x y =", x * y)
print("identity =", A.find_identity())

banner("3C(alpha, 1-alpha): one axis rebuilt as 1 - x")
ex = make_3C_skew(Fraction(1, 4))
print("label    =", ex.label)
print("m axis w =", ex.m_axis, "obeys M(%s, %s)" % (ex.alpha, ex.beta))
print("j axis y =", ex.j_axis, "obeys J(%s)" % ex.alpha)
print("w y      =", ex.m_axis * ex.j_axis)

banner("Q2(1/3): the 4-dimensional double-axis algebra")
A = make_Q2_third(QQ)
print(emit_algebra_file(A))
print("identity = (3/5) * (s1 + s2 + d1 + d2):", A.find_identity())

banner("the same table over F_5 loses its identity")
A5 = make_Q2_third(PrimeField(5))
print("identity over F_5:", A5.find_identity())
print("annihilator basis:", [str(v) for v in A5.annihilator()])

banner("quotient by the radical, then adjoin an identity")
Q = make_Q2x_via_radical()
print("quotient matches the direct 3-dimensional table:",
      Q.same_table(make_Q2x()))
print(emit_algebra_file(make_Q2x_plus_one().algebra))

banner("every classified skew example, both characteristics")
for char in (0, 5):
    for ex in skew_examples(char):
        print("char %s: %-18s alpha + beta = %s"
              % (char, ex.label, ex.alpha + ex.beta))
