"""The algebra file format: parsing, emission, and round trips."""

from fractions import Fraction

import pytest

from axetlab.algfile import (ParseError, emit_algebra_file, format_element,
                             parse_algebra_file)
from axetlab.catalog import (make_2B, make_3C_minus1_2, make_3C_skew,
                             make_orthogonal_branch, make_Q2_skew,
                             make_Q2_third, make_Q2x, make_Q2x_plus_one,
                             skew_examples)
from axetlab.fusion import make_jordan, make_monster
from axetlab.scalars import QQ, BadField

Q2_TEXT = """\
field rational
dim 4
basis s1 s2 d1 d2
product s1 s1 = s1
product s2 s2 = s2
product d1 d1 = d1
product d2 d2 = d2
product s1 d1 = 1/3*s1 + 1/6*d1 - 1/6*d2
product s1 d2 = 1/3*s1 - 1/6*d1 + 1/6*d2
product s2 d1 = 1/3*s2 + 1/6*d1 - 1/6*d2
product s2 d2 = 1/3*s2 - 1/6*d1 + 1/6*d2
product d1 d2 = -1/3*s1 - 1/3*s2 + 1/3*d1 + 1/3*d2
axis jordan 1/3 s1
axis monster 2/3 1/3 d1
"""


def test_parse_table_row():
    doc = parse_algebra_file(Q2_TEXT)
    A = doc.algebra
    assert A.same_table(make_Q2_third())
    s1, d1, d2 = A.gen("s1"), A.gen("d1"), A.gen("d2")
    assert s1 * d1 == Fraction(1, 3) * s1 + Fraction(1, 6) * (d1 - d2)


def test_parse_axes():
    doc = parse_algebra_file(Q2_TEXT)
    (el1, law1), (el2, law2) = doc.axes
    assert el1 == doc.algebra.gen("s1")
    assert law1.eigenvalues == [1, 0, Fraction(1, 3)]
    assert el2 == doc.algebra.gen("d1")
    assert law2.eigenvalues == [1, 0, Fraction(2, 3), Fraction(1, 3)]


def test_missing_pairs_are_zero():
    doc = parse_algebra_file(Q2_TEXT)
    A = doc.algebra
    assert (A.gen("s1") * A.gen("s2")).is_zero()


def test_comments_and_blank_lines():
    text = ("# header\n\nfield rational\n# more\ndim 1\nbasis e\n"
            "product e e = e  # trailing remark is part of no grammar\n")
    with pytest.raises(ParseError):
        parse_algebra_file(text)
    text = "# header\n\nfield rational\n# more\ndim 1\nbasis e\n" \
           "product e e = e\n"
    doc = parse_algebra_file(text)
    assert doc.algebra.dim == 1


def test_prime_field_file():
    text = ("field prime 5\ndim 2\nbasis a b\nproduct a a = a\n"
            "product a b = 2/3*a + 4*b\n")
    doc = parse_algebra_file(text)
    F = doc.algebra.field
    assert F.char == 5
    prod = doc.algebra.gen("a") * doc.algebra.gen("b")
    assert prod == doc.algebra.element({"a": F.coerce(4), "b": F.coerce(4)})


def test_function_field_file():
    text = ("field function alpha\ndim 2\nbasis x y\nproduct x x = x\n"
            "product x y = alpha*x + (1 - alpha)*y\n")
    doc = parse_algebra_file(text)
    field = doc.algebra.field
    alpha = field.sym("alpha")
    prod = doc.algebra.gen("x") * doc.algebra.gen("y")
    assert prod.coeff("x") == alpha
    assert prod.coeff("y") == 1 - alpha


def test_field_prime_2_rejected():
    with pytest.raises(BadField):
        parse_algebra_file("field prime 2\ndim 1\nbasis e\n")


def test_field_prime_composite_rejected():
    with pytest.raises(BadField):
        parse_algebra_file("field prime 9\ndim 1\nbasis e\n")


def test_error_positions():
    bad = ("field rational\ndim 2\nbasis a b\nproduct a a = a\n"
           "product a b = 1/3*a + nosuch\n")
    with pytest.raises(ParseError) as info:
        parse_algebra_file(bad)
    assert info.value.line == 5
    assert info.value.column == 14
    assert "nosuch" in str(info.value)


def test_stage_order_enforced():
    with pytest.raises(ParseError):
        parse_algebra_file("dim 1\nfield rational\nbasis e\n")
    with pytest.raises(ParseError):
        parse_algebra_file("field rational\nbasis e\ndim 1\n")


def test_duplicate_product_rejected():
    text = ("field rational\ndim 1\nbasis e\nproduct e e = e\n"
            "product e e = e\n")
    with pytest.raises(ParseError) as info:
        parse_algebra_file(text)
    assert "duplicate" in str(info.value)


def test_scalar_products_of_basis_symbols_rejected():
    text = "field rational\ndim 2\nbasis a b\nproduct a b = a*b\n"
    with pytest.raises(ParseError):
        parse_algebra_file(text)


def test_unknown_law_rejected():
    text = ("field rational\ndim 1\nbasis e\nproduct e e = e\n"
            "axis ising 1/4 e\n")
    with pytest.raises(ParseError):
        parse_algebra_file(text)


def test_degenerate_law_parameters_surface_as_errors():
    text = ("field rational\ndim 1\nbasis e\nproduct e e = e\n"
            "axis monster 1/2 1/2 e\n")
    with pytest.raises(Exception):
        parse_algebra_file(text)


def test_format_element():
    A = make_Q2_third()
    v = A.element({"s1": Fraction(1, 3), "d1": Fraction(1, 6),
                   "d2": Fraction(-1, 6)})
    assert format_element(v.coords, A.basis_names, QQ.zero) \
        == "1/3*s1 + 1/6*d1 - 1/6*d2"
    assert format_element(A.zero.coords, A.basis_names, QQ.zero) == "0"
    assert format_element(A.gen("s2").coords, A.basis_names, QQ.zero) == "s2"


def test_emit_is_deterministic():
    ex = make_Q2_skew()
    axes = [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)]
    assert emit_algebra_file(ex.algebra, axes) \
        == emit_algebra_file(ex.algebra, axes)


def round_trip(algebra, axes=()):
    text = emit_algebra_file(algebra, axes)
    doc = parse_algebra_file(text)
    assert doc.algebra.same_table(algebra)
    assert doc.algebra.field == algebra.field
    assert len(doc.axes) == len(axes)
    for (el, law), (el2, law2) in zip(axes, doc.axes):
        assert el2.coords == el.coords
        assert law2.eigenvalues == law.eigenvalues
        assert law2.table == law.table
    assert emit_algebra_file(doc.algebra, doc.axes) == text


def test_round_trip_catalog_corpus():
    round_trip(make_2B())
    round_trip(make_Q2_third())
    round_trip(make_Q2x())
    for ex in skew_examples(0) + skew_examples(5) \
            + [make_orthogonal_branch()]:
        round_trip(ex.algebra, [(ex.m_axis, ex.m_law),
                                (ex.j_axis, ex.j_law)])


def test_round_trip_function_field():
    from axetlab.catalog import SkewConstants, make_generic_skew
    A = make_generic_skew(SkewConstants.generic())
    round_trip(A)


def test_round_trip_negative_and_integer_coefficients():
    ex = make_3C_minus1_2()
    round_trip(ex.algebra, [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)])
