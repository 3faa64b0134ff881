"""Exact scalar arithmetic: fields, polynomials, the expression grammar."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axetlab.scalars import (BadField, DenominatorVanishes, DivisionByZero,
                             ExprError, FunctionField, MixedFields, MultiPoly,
                             NonlinearExpression, PrimeField, QQ,
                             RationalFunction, UnboundSymbol, parse_expression,
                             parse_scalar, rf_equal, skew_field, solve_linear,
                             tokenize)


# -- tokenizer ----------------------------------------------------------------

def test_tokenize_kinds_and_positions():
    tokens = tokenize("12*ab + c_3")
    assert tokens[0] == ("INT", "12", 0)
    assert tokens[1] == ("OP", "*", 2)
    assert tokens[2] == ("NAME", "ab", 3)
    assert tokens[3] == ("OP", "+", 6)
    assert tokens[4] == ("NAME", "c_3", 8)
    assert tokens[5][0] == "END"


def test_tokenize_rejects_stray_characters():
    with pytest.raises(ExprError):
        tokenize("1 @ 2")


# -- grammar ------------------------------------------------------------------

def qq(text):
    return parse_scalar(text, QQ)


def test_precedence_product_over_sum():
    assert qq("2 + 3*4") == 14


def test_precedence_power_over_product():
    assert qq("2*3^2") == 18


def test_power_binds_tighter_than_unary_minus():
    assert qq("-2^2") == -4


def test_power_left_associative():
    assert qq("2^2^3") == 64


def test_parentheses():
    assert qq("(1 + 2) * 3") == 9


def test_rational_literals():
    assert qq("1/3 - 1/6") == Fraction(1, 6)


def test_division_by_zero_literal():
    with pytest.raises(DivisionByZero):
        qq("1/0")


def test_unbound_symbol():
    with pytest.raises(UnboundSymbol):
        qq("1 + x")


def test_trailing_input():
    with pytest.raises(ExprError):
        qq("1 2")


def test_exponent_must_be_integer():
    with pytest.raises(ExprError):
        qq("2^(3)")


def test_parse_expression_binds_names():
    field = FunctionField(("t",))
    t = field.sym("t")
    v = parse_expression("(t + 1)^2 - t^2 - 2*t", field, {"t": t})
    assert v == field.one


# -- prime fields -------------------------------------------------------------

def test_prime_field_rejects_composite_and_two():
    with pytest.raises(BadField):
        PrimeField(6)
    with pytest.raises(BadField):
        PrimeField(2)
    with pytest.raises(BadField):
        PrimeField(1)


def test_prime_field_arithmetic():
    F = PrimeField(5)
    a = F.coerce(3)
    b = F.coerce(4)
    assert a + b == F.coerce(2)
    assert a * b == F.coerce(2)
    assert a - b == F.coerce(4)
    assert a / b == F.coerce(2)
    assert -a == F.coerce(2)


def test_prime_field_fraction_coercion():
    F = PrimeField(5)
    assert F.coerce(Fraction(1, 3)) == F.coerce(2)
    assert F.coerce(Fraction(2, 3)) == F.coerce(4)
    assert F.coerce(Fraction(1, 2)) == F.coerce(3)
    assert F.coerce(Fraction(1, 6)) == F.coerce(1)


def test_prime_field_division_by_zero():
    F = PrimeField(5)
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


def test_prime_field_mixing_moduli():
    with pytest.raises(MixedFields):
        PrimeField(5).coerce(PrimeField(7).one)


def test_parse_scalar_prime_field():
    F = PrimeField(5)
    assert parse_scalar("2/3", F) == F.coerce(4)


# -- multivariate polynomials -------------------------------------------------

NAMES = ("x", "y")


def poly(text):
    field = FunctionField(NAMES)
    return parse_scalar(text, field)


def test_multipoly_repr_reparses():
    p = poly("2*x^2 - x*y + 1")
    assert repr(p.num) == "2*x^2 - x*y + 1"
    assert poly(repr(p.num)) == p


def test_degree_and_coefficient():
    p = MultiPoly.variable(NAMES, "x") ** 2 * 3 \
        + MultiPoly.variable(NAMES, "y")
    assert p.degree_in("x") == 2
    assert p.coefficient_of("x", 2) == MultiPoly.constant(NAMES, 3)
    assert p.coefficient_of("x", 0) == MultiPoly.variable(NAMES, "y")


def test_multipoly_evaluate():
    p = MultiPoly.variable(NAMES, "x") * MultiPoly.variable(NAMES, "y") + 1
    v = p.evaluate({"x": Fraction(2), "y": Fraction(1, 2)}, QQ)
    assert v == 2


def test_multipoly_evaluate_unbound():
    p = MultiPoly.variable(NAMES, "x")
    with pytest.raises(UnboundSymbol):
        p.evaluate({"y": Fraction(1)}, QQ)


def test_mixed_symbol_tuples_rejected():
    p = MultiPoly.variable(("x",), "x")
    q = MultiPoly.variable(("y",), "y")
    with pytest.raises(MixedFields):
        p + q


# -- rational functions -------------------------------------------------------

def test_rf_equality_cross_multiplies():
    x = RationalFunction.symbol(NAMES, "x")
    y = RationalFunction.symbol(NAMES, "y")
    left = (x * x - y * y) / (x - y)
    assert left == x + y
    assert rf_equal(left, x + y)


def test_rf_zero_denominator_rejected():
    x = RationalFunction.symbol(NAMES, "x")
    with pytest.raises(DivisionByZero):
        x / (x - x)


def test_rf_substitute():
    x = RationalFunction.symbol(NAMES, "x")
    y = RationalFunction.symbol(NAMES, "y")
    f = (x + 1) / y
    g = f.substitute({"x": y - 1})
    assert g == RationalFunction.constant(NAMES, 1)


def test_rf_evaluate_and_poles():
    x = RationalFunction.symbol(NAMES, "x")
    f = 1 / x
    assert f.evaluate({"x": Fraction(4), "y": Fraction(0)}, QQ) \
        == Fraction(1, 4)
    with pytest.raises(DenominatorVanishes):
        f.evaluate({"x": Fraction(0), "y": Fraction(0)}, QQ)


def test_rf_repr_reparses():
    x = RationalFunction.symbol(NAMES, "x")
    y = RationalFunction.symbol(NAMES, "y")
    f = (x + y) / (x - y)
    assert poly(repr(f)) == f


# -- linear solving -----------------------------------------------------------

def test_solve_linear():
    field = FunctionField(("a", "b"))
    a = field.sym("a")
    b = field.sym("b")
    v = solve_linear(2 * a * b - b - 1, "a")
    assert v == (b + 1) / (2 * b)


def test_solve_linear_rejects_quadratic():
    field = FunctionField(("a",))
    a = field.sym("a")
    with pytest.raises(NonlinearExpression):
        solve_linear(a * a - 1, "a")


def test_solve_linear_rejects_absent_symbol():
    field = FunctionField(("a", "b"))
    b = field.sym("b")
    with pytest.raises(DivisionByZero):
        solve_linear(b + 1, "a")


def test_skew_field_symbols():
    field = skew_field()
    assert field.names == ("alpha", "beta", "l1", "l1f", "l2f", "zeta",
                           "theta", "kappa")
    assert set(field.symbols()) == set(field.names)


# -- property tests -----------------------------------------------------------

f5_elements = st.integers(min_value=0, max_value=4).map(PrimeField(5).coerce)


@given(f5_elements, f5_elements, f5_elements)
def test_f5_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(f5_elements)
def test_f5_inverses(a):
    F = PrimeField(5)
    assert a + (-a) == F.zero
    if a != F.zero:
        assert a * (F.one / a) == F.one


coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=6)
exponents = st.tuples(st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(exponents, coeffs, max_size=4).map(
    lambda terms: MultiPoly(NAMES, terms))


@given(polys, polys, polys)
@settings(max_examples=60)
def test_multipoly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


points = st.tuples(
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4))


@given(polys, polys, points)
@settings(max_examples=60)
def test_multipoly_evaluation_is_a_homomorphism(p, q, point):
    assignment = {"x": point[0], "y": point[1]}
    lhs = (p * q + p).evaluate(assignment, QQ)
    rhs = p.evaluate(assignment, QQ) * q.evaluate(assignment, QQ) \
        + p.evaluate(assignment, QQ)
    assert lhs == rhs


@given(polys, polys, polys, points)
@settings(max_examples=60)
def test_rf_equality_agrees_with_evaluation(p, q, den, point):
    if den.is_zero():
        den = MultiPoly.constant(NAMES, 1)
    f = RationalFunction(p, den)
    g = RationalFunction(q, den)
    assignment = {"x": point[0], "y": point[1]}
    try:
        fv = f.evaluate(assignment, QQ)
        gv = g.evaluate(assignment, QQ)
    except DenominatorVanishes:
        return
    if f == g:
        assert fv == gv
    elif fv != gv:
        assert f != g
