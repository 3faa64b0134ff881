"""Axis certification: what passes, what fails, and why.

Run with: python3 demos/02_axis_reports.py
"""

from fractions import Fraction

from axetlab import (FusionLaw, make_3C, make_jordan, make_Q2_skew,
                     verify_axis)


def show(title, algebra, element, law):
    report = verify_axis(algebra, element, law)
    verdict = "pass" if report.passed else "FAIL"
    print("%-34s %s" % (title, verdict))
    print("    " + report.summary())


ex = make_Q2_skew()
A = ex.algebra

print("the two distinguished axes of the skew double-axis algebra:")
show("t1 under M(1/3, 2/3)", A, ex.m_axis, ex.m_law)
show("s1 under J(1/3)", A, ex.j_axis, ex.j_law)

print()
print("a jordan axis also certifies under the wider monster law")
print("(its alpha eigenspace is simply empty):")
show("s1 under M(1/3, 2/3)", A, ex.j_axis, ex.m_law)

print()
print("what failure looks like:")
show("2 s1 is not idempotent", A, 2 * ex.j_axis, ex.j_law)
show("s1 + s2: idempotent, wrong spectrum", A, ex.j_axis + A.gen("s2"),
     ex.j_law)
show("t1 under the narrow law J(1/3)", A, ex.m_axis,
     make_jordan(Fraction(1, 3)))
show("the identity is not primitive", A, A.find_identity(),
     make_jordan(Fraction(1, 3)))

print()
print("a fusion violation carries a witness: same eigenvalues as J(1/4),")
print("but a table that forbids the 0 * 1/4 product")
B = make_3C(Fraction(1, 4))
too_strict = FusionLaw([1, 0, Fraction(1, 4)], {
    (0, 0): {0}, (1, 1): {1}, (1, 2): set(), (0, 2): {2}, (2, 2): {0, 1},
})
report = verify_axis(B, B.gen("x"), too_strict)
print("   x under the strict law:", report.summary())
lam, mu, witness = (report.fusion_violations[0].lam,
                    report.fusion_violations[0].mu,
                    report.fusion_violations[0].witness)
print("   first violation: a %s-vector times a %s-vector gave %s"
      % (lam, mu, witness))
