"""The generic two-axis algebra over its function field.

Everything here happens over Q(alpha, beta, l1, l1f, l2f, zeta, theta,
kappa): the products, the eigenvectors, and the relations are rational
functions, and each displayed identity is checked exactly.

Run with: python3 demos/04_symbolic_relations.py
"""

from fractions import Fraction

from axetlab import SkewConstants, make_generic_skew
from axetlab.scalars import QQ
from axetlab.skewverify import (check_bracket_table, check_constant_chains,
                                check_eigenvectors_generic,
                                check_flip_symmetry,
                                check_projection_relation,
                                check_seress_relation_u,
                                check_seress_relation_v,
                                check_shift_expansion, check_shifted_pair,
                                proof2_expression, shift_difference_at)

c = SkewConstants.generic()
A = make_generic_skew(c)
a, b, cc, s = A.basis()

print("the generic algebra on (a, b, c, sigma), sigma = ab - beta(a+b):")
print("   a b     =", a * b)
print("   sigma^2 =", s * s)

print()
print("derived constants and the chain that ties them together:")
print("   gamma =", c.gamma)
print("   eps   =", c.eps)
print("   delta =", c.delta)
print("   (alpha-1) gamma == eps + alpha beta == delta + beta^2:",
      (c.alpha - 1) * c.gamma == c.eps + c.alpha * c.beta
      == c.delta + c.beta ** 2)

print()
print("P is the c-coefficient obstruction; at the orthogonal branch")
print("point (alpha, beta, l1, l1f) = (1/3, 2/3, 5/12, 2/3) it vanishes:")
point = {"alpha": Fraction(1, 3), "beta": Fraction(2, 3),
         "l1": Fraction(5, 12), "l1f": Fraction(2, 3),
         "l2f": Fraction(0), "zeta": Fraction(0), "theta": Fraction(0),
         "kappa": Fraction(0)}
print("   P at the branch point =", c.P.evaluate(point, QQ))

print()
print("the symbolic checks, each an identically-zero rational function:")
for check in (check_eigenvectors_generic, check_constant_chains,
              check_bracket_table, check_projection_relation,
              check_seress_relation_u, check_seress_relation_v,
              check_shifted_pair, check_flip_symmetry,
              check_shift_expansion):
    result = check()
    print("   %-22s %s  %s" % (result.name,
                               "pass" if result.passed else "FAIL",
                               result.detail))

print()
print("the first obstruction in displayed form:")
print("   proof2 =", proof2_expression(c))

print()
print("the shifted-axis expansion difference is zero only at the branch")
print("point; a generic probe keeps it visible:")
print("   at (1/3, 2/3, 5/12, 2/3):",
      shift_difference_at(Fraction(1, 3), Fraction(2, 3),
                          Fraction(5, 12), Fraction(2, 3)))
print("   at (2, 5, 7, 11):       ",
      shift_difference_at(Fraction(2), Fraction(5), Fraction(7),
                          Fraction(11)))
