"""Replaying the classification of two-axis algebras with a skew axet.

The generic algebra splits on whether P vanishes.  P = 0 pins every
parameter and rebuilds one concrete algebra; P != 0 runs through four
pair-algebra subcases, two of which are contradictions.  A dichotomy
check then sorts concrete axis pairs into the jordan and skew cases.

Run with: python3 demos/05_classification.py
"""

from fractions import Fraction

from axetlab import (dichotomy_check, make_2B, make_3C_skew, make_monster,
                     make_Q2_skew, make_Q2_third)
from axetlab.scalars import QQ
from axetlab.skewverify import (NoMatch, replay_nonorthogonal_branch,
                                replay_orthogonal_branch)

print("orthogonal branch (P = 0), characteristic 0:")
print(replay_orthogonal_branch(0))

print()
print("the same branch over F_5 lands on the adjoined-identity quotient:")
print(replay_orthogonal_branch(5))

print()
print("non-orthogonal branches (P != 0):")
for report in replay_nonorthogonal_branch():
    print(report)
    print()

print("the dichotomy on concrete axis pairs:")
law = make_monster(Fraction(1, 3), Fraction(2, 3))
B = make_2B()
kind, label = dichotomy_check(B, B.gen("a"), B.gen("b"), law)
print("   2B generators:        ", kind, label)

ex = make_Q2_skew()
kind, label = dichotomy_check(ex.algebra, ex.m_axis, ex.j_axis, ex.m_law,
                              ex.j_law)
print("   skew double-axis pair:", kind, label)

ex = make_3C_skew(Fraction(1, 4))
kind, label = dichotomy_check(ex.algebra, ex.m_axis, ex.j_axis, ex.m_law,
                              ex.j_law)
print("   3C(1/4, 3/4) pair:    ", kind, label)

print()
print("a pair whose orbit is too large is rejected:")
A = make_Q2_third(QQ)
wide = make_monster(Fraction(2, 3), Fraction(1, 3))
try:
    dichotomy_check(A, A.gen("d1"), A.gen("s1"), wide)
except NoMatch as e:
    print("   NoMatch:", e)
