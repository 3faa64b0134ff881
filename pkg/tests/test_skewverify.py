"""The symbolic relation calculus and the classification replay."""

from fractions import Fraction

import pytest

from axetlab.catalog import (SkewConstants, make_2B, make_3C_skew,
                             make_generic_skew, make_Q2_skew, make_Q2_third,
                             make_Q2x_plus_one)
from axetlab.fusion import make_jordan, make_monster
from axetlab.scalars import QQ, PrimeField
from axetlab.skewverify import (IdentityFails, NoMatch, beta_component,
                                check_bracket_table, check_constant_chains,
                                check_eigenvectors_generic,
                                check_flip_symmetry,
                                check_projection_relation,
                                check_seress_relation_u,
                                check_seress_relation_v,
                                check_shift_expansion, check_shifted_pair,
                                dichotomy_check, generic_context,
                                projection_on_b, proof2_expression,
                                replay_nonorthogonal_branch,
                                replay_orthogonal_branch,
                                shift_difference_at)

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


def test_generic_context_shape():
    c, A = generic_context()
    assert A.basis_names == ("a", "b", "c", "sigma")
    assert A.dim == 4


def test_all_symbolic_checks_pass():
    context = generic_context()
    for check in (check_eigenvectors_generic, check_constant_chains,
                  check_bracket_table, check_projection_relation,
                  check_seress_relation_u, check_seress_relation_v,
                  check_shifted_pair, check_flip_symmetry,
                  check_shift_expansion):
        result = check() if check in (check_constant_chains,
                                      check_flip_symmetry) \
            else check(context)
        assert result.passed, result.name


def test_beta_component_reads_the_b_minus_c_coordinate():
    _, A = generic_context()
    a, b, cc, s = A.basis()
    assert beta_component(b) == A.field.one
    assert beta_component(cc) == -A.field.one
    assert beta_component(a + s) == A.field.zero
    assert beta_component(3 * b - 2 * cc) == A.field.coerce(5)


def test_projection_on_b_values():
    c, A = generic_context()
    a, b, cc, _ = A.basis()
    assert projection_on_b(A, c, a) == c.l1f
    assert projection_on_b(A, c, b) == A.field.one
    assert projection_on_b(A, c, cc) == -(c.P / c.beta) * c.gammaf


def test_proof2_expression_is_the_displayed_combination():
    c = SkewConstants.generic()
    ab = c.alpha - c.beta
    want = (-c.beta ** 2 * ab - c.beta * c.delta
            + Fraction(1, 2) * c.beta * ab
            - (c.alpha - 2 * c.beta) * c.deltaf)
    assert proof2_expression(c) == want


def test_perturbed_table_fails_eigenvector_check():
    c, A = generic_context()
    A.products[0][3][0] = A.products[0][3][0] + 1
    with pytest.raises(IdentityFails) as info:
        check_eigenvectors_generic((c, A))
    assert "eigenvector" in info.value.name


def test_perturbed_table_fails_bracket_table():
    c, A = generic_context()
    A.products[1][3][1] = A.products[1][3][1] + 1
    with pytest.raises(IdentityFails) as info:
        check_bracket_table((c, A))
    assert "beta component" in info.value.name


def test_shift_difference_values():
    assert shift_difference_at(THIRD, TWO_THIRDS, Fraction(5, 12),
                               TWO_THIRDS) == 0
    assert shift_difference_at(2, 5, 7, 11) != 0


def test_orthogonal_replay_char0():
    report = replay_orthogonal_branch(0)
    assert report.outcome == "Q2(1/3,2/3)"
    assert any("(alpha, beta, l1, l1f) = (1/3, 2/3, 5/12, 2/3)" in s
               for s in report.constraints)
    assert any("l1 = (beta + 1)/4" in s for s in report.constraints)
    assert any("(5/18, 1/9, 1/6)" in s for s in report.constraints)


def test_orthogonal_replay_char5():
    report = replay_orthogonal_branch(5)
    assert report.outcome == "Q2(1/3)^x + one"


def test_nonorthogonal_replay_outcomes():
    reports = replay_nonorthogonal_branch()
    assert [r.outcome for r in reports] == [
        "contradiction", "contradiction", "3C(-1,2)",
        "3C(alpha,1-alpha) for alpha != -1"]
    assert reports[0].witness == "c = -b gives c^2 - c = 2b != 0"
    assert reports[3].witness == "residual (alpha-1)P/2"
    for r in reports:
        assert r.constraints


def test_dichotomy_fixed_pair_is_jordan():
    A = make_2B()
    law = make_monster(THIRD, TWO_THIRDS)
    kind, label = dichotomy_check(A, A.gen("a"), A.gen("b"), law)
    assert (kind, label) == ("jordan", "J(1/3)")


def test_dichotomy_skew_pairs():
    ex = make_Q2_skew()
    kind, label = dichotomy_check(ex.algebra, ex.m_axis, ex.j_axis,
                                  ex.m_law, ex.j_law)
    assert (kind, label) == ("skew", "Q2(1/3,2/3)")

    ex = make_3C_skew(Fraction(1, 4))
    kind, label = dichotomy_check(ex.algebra, ex.m_axis, ex.j_axis,
                                  ex.m_law, ex.j_law)
    assert (kind, label) == ("skew", "3C(1/4,3/4)")


def test_dichotomy_char5():
    ex = make_Q2x_plus_one()
    kind, label = dichotomy_check(ex.algebra, ex.m_axis, ex.j_axis,
                                  ex.m_law, ex.j_law)
    assert (kind, label) == ("skew", "Q2(1/3)^x + one")


def test_dichotomy_rejects_non_axes():
    A = make_2B()
    law = make_monster(THIRD, TWO_THIRDS)
    with pytest.raises(NoMatch):
        dichotomy_check(A, A.gen("a") + A.gen("b"), A.gen("b"), law)


def test_dichotomy_rejects_larger_orbits():
    # d1 and s1 in Q2(1/3) generate the four-point square, not the triple
    A = make_Q2_third()
    law = make_monster(TWO_THIRDS, THIRD)
    with pytest.raises(NoMatch) as info:
        dichotomy_check(A, A.gen("d1"), A.gen("s1"), law)
    assert "X(4)" in str(info.value)


def test_replay_rejects_unsupported_characteristic():
    with pytest.raises(Exception):
        replay_orthogonal_branch(3)
