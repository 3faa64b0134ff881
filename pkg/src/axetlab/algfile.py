"""A line-oriented text format for structure-constant algebras.

A document looks like::

    # comment
    field rational            (or: field prime 5 / field function alpha beta)
    dim 4
    basis s1 s2 d1 d2
    product s1 s1 = s1
    product s1 d1 = 1/3*s1 + 1/6*d1 - 1/6*d2
    axis jordan 1/3 s1
    axis monster 1/3 2/3 3/5*s1 + 3/5*s2 - 2/5*d1 + 3/5*d2

Missing product pairs are zero.  All coefficients are exact expressions
under the scalar grammar; the emitter is deterministic and round-trips
through the parser coefficient-exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import StructureAlgebra
from .fusion import make_jordan, make_monster
from .scalars import (DivisionByZero, ExprError, FunctionField, MixedFields,
                      PrimeField, PrimeFieldElement, RationalField,
                      RationalFunction, UnboundSymbol, parse_expression,
                      QQ)

_EXPR_ERRORS = (ExprError, UnboundSymbol, MixedFields, DivisionByZero,
                TypeError, ZeroDivisionError)


class ParseError(ValueError):
    """Malformed document, with one-based line and column."""

    def __init__(self, message, line, column=1):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


@dataclass
class AlgebraFile:
    """A parsed document: the algebra and its declared axes."""

    algebra: StructureAlgebra
    axes: list  # of (Element, FusionLaw)


class _LinComb:
    """Linear combination of basis symbols; products of symbols refused."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _scale(self, c):
        return _LinComb(self.field, [c * x for x in self.coords])

    def __add__(self, other):
        if isinstance(other, _LinComb):
            return _LinComb(self.field, [x + y for x, y in
                                         zip(self.coords, other.coords)])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, _LinComb):
            return _LinComb(self.field, [x - y for x, y in
                                         zip(self.coords, other.coords)])
        return NotImplemented

    def __neg__(self):
        return self._scale(-self.field.one)

    def __radd__(self, other):
        raise ExprError("cannot add a scalar to a basis combination", pos=0)

    def __rsub__(self, other):
        raise ExprError("cannot mix scalars and basis combinations", pos=0)

    def __mul__(self, other):
        if isinstance(other, _LinComb):
            raise ExprError("products of basis symbols are not allowed here",
                            pos=0)
        return self._scale(self.field.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _LinComb):
            raise ExprError("cannot divide by a basis symbol", pos=0)
        return self._scale(self.field.one / self.field.coerce(other))

    def __rtruediv__(self, other):
        raise ExprError("cannot divide by a basis symbol", pos=0)

    def __pow__(self, k):
        raise ExprError("basis symbols cannot be raised to powers", pos=0)


def _parse_element(text, algebra, lineno, column):
    """An element of the algebra from a linear expression over its basis."""
    field = algebra.field
    names = dict(field.symbols())
    zero = [field.zero] * algebra.dim
    for i, n in enumerate(algebra.basis_names):
        coords = list(zero)
        coords[i] = field.one
        names[n] = _LinComb(field, coords)
    try:
        value = parse_expression(text, field, names)
    except _EXPR_ERRORS as e:
        pos = getattr(e, "pos", 0) or 0
        raise ParseError(str(e), lineno, column + pos)
    if isinstance(value, _LinComb):
        return algebra.element(value.coords)
    # a pure scalar is only an element when it is zero
    if value == field.zero:
        return algebra.zero
    raise ParseError("expected a combination of basis symbols", lineno,
                     column)


def _parse_scalar_token(text, field, lineno, column):
    try:
        return parse_expression(text, field, field.symbols())
    except _EXPR_ERRORS as e:
        pos = getattr(e, "pos", 0) or 0
        raise ParseError(str(e), lineno, column + pos)


def _parse_field_line(parts, lineno):
    if not parts:
        raise ParseError("field needs a descriptor", lineno)
    kind = parts[0]
    if kind == "rational":
        if len(parts) != 1:
            raise ParseError("field rational takes no arguments", lineno)
        return QQ
    if kind == "prime":
        if len(parts) != 2:
            raise ParseError("field prime needs one argument", lineno)
        try:
            p = int(parts[1])
        except ValueError:
            raise ParseError("prime must be an integer", lineno)
        return PrimeField(p)
    if kind == "function":
        if len(parts) < 2:
            raise ParseError("field function needs symbol names", lineno)
        return FunctionField(tuple(parts[1:]))
    raise ParseError("unknown field descriptor %r" % kind, lineno)


def parse_algebra_file(text):
    """Parse a document into an AlgebraFile.

    Sections must come in order: field, dim, basis, products, axes.
    """
    field = None
    dim = None
    basis = None
    products = {}
    seen_pairs = set()
    axis_lines = []
    stage = 0  # 0 field, 1 dim, 2 basis, 3 products/axes

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        head = parts[0]
        if head == "field":
            if stage != 0:
                raise ParseError("field must be declared exactly once, first",
                                 lineno)
            field = _parse_field_line(parts[1:], lineno)
            stage = 1
        elif head == "dim":
            if stage != 1:
                raise ParseError("dim must follow the field line", lineno)
            if len(parts) != 2:
                raise ParseError("dim needs one integer", lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise ParseError("dim must be an integer", lineno)
            if dim < 1:
                raise ParseError("dim must be positive", lineno)
            stage = 2
        elif head == "basis":
            if stage != 2:
                raise ParseError("basis must follow the dim line", lineno)
            basis = tuple(parts[1:])
            if len(basis) != dim:
                raise ParseError("expected %d basis names, got %d"
                                 % (dim, len(basis)), lineno)
            if len(set(basis)) != len(basis):
                raise ParseError("duplicate basis names", lineno)
            for n in basis:
                if not (n[0].isalpha() and all(c.isalnum() or c == "_"
                                               for c in n)):
                    raise ParseError("bad basis name %r" % n, lineno)
                if n in field.symbols():
                    raise ParseError("basis name %r shadows a field symbol"
                                     % n, lineno)
            stage = 3
        elif head == "product":
            if stage != 3:
                raise ParseError("products must follow the basis line",
                                 lineno)
            if len(parts) < 5 or parts[3] != "=":
                raise ParseError("expected: product <x> <y> = <expression>",
                                 lineno)
            x, y = parts[1], parts[2]
            if x not in basis or y not in basis:
                raise ParseError("unknown basis name in product pair",
                                 lineno)
            pair = tuple(sorted((x, y)))
            if pair in seen_pairs:
                raise ParseError("duplicate product entry for %s %s" % pair,
                                 lineno)
            seen_pairs.add(pair)
            column = raw.index("=") + 2
            products[(x, y, lineno, column)] = raw.split("=", 1)[1].strip()
        elif head == "axis":
            if stage != 3:
                raise ParseError("axes must follow the basis line", lineno)
            axis_lines.append((lineno, raw, parts[1:]))
        else:
            raise ParseError("unknown directive %r" % head, lineno)

    if field is None:
        raise ParseError("missing field line", max(1, text.count("\n") + 1))
    if basis is None:
        raise ParseError("missing basis line", max(1, text.count("\n") + 1))

    # build a zero-table algebra first so expressions can be parsed, then
    # rebuild with the parsed products
    shell = StructureAlgebra(field, basis, {})
    index = {n: i for i, n in enumerate(basis)}
    table = {}
    for (x, y, lineno, column), expr in products.items():
        element = _parse_element(expr, shell, lineno, column)
        table[(index[x], index[y])] = element.coords
    algebra = StructureAlgebra(field, basis, table)

    axes = []
    for lineno, _, rest in axis_lines:
        if not rest:
            raise ParseError("axis needs a law and an element", lineno)
        law_name = rest[0]
        if law_name == "jordan":
            if len(rest) < 3:
                raise ParseError("expected: axis jordan <eta> <element>",
                                 lineno)
            eta = _parse_scalar_token(rest[1], field, lineno, 1)
            law = make_jordan(eta)
            expr = " ".join(rest[2:])
        elif law_name == "monster":
            if len(rest) < 4:
                raise ParseError(
                    "expected: axis monster <alpha> <beta> <element>", lineno)
            alpha = _parse_scalar_token(rest[1], field, lineno, 1)
            beta = _parse_scalar_token(rest[2], field, lineno, 1)
            law = make_monster(alpha, beta)
            expr = " ".join(rest[3:])
        else:
            raise ParseError("unknown law %r (want jordan or monster)"
                             % law_name, lineno)
        element = _parse_element(expr, algebra, lineno, 1)
        axes.append((element, law))
    return AlgebraFile(algebra, axes)


# -- emitting -----------------------------------------------------------------

def _format_coefficient(c):
    """A grammar-parseable string for one coefficient; may start with -."""
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, PrimeFieldElement):
        return str(c.value)
    if isinstance(c, RationalFunction):
        text = repr(c)
        if any(ch in text for ch in "+- ") or "/" in text:
            return "(" + text + ")"
        return text
    raise MixedFields("cannot format %r" % (c,))


def format_element(coords, basis_names, zero):
    """Deterministic rendering of a coordinate vector, '0' when zero."""
    parts = []
    for c, n in zip(coords, basis_names):
        if c == zero:
            continue
        text = _format_coefficient(c)
        sign = "+"
        if text.startswith("-"):
            sign = "-"
            text = text[1:]
        if text == "1":
            body = n
        else:
            body = "%s*%s" % (text, n)
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def _format_field(field):
    if isinstance(field, RationalField):
        return "field rational"
    if isinstance(field, PrimeField):
        return "field prime %d" % field.p
    if isinstance(field, FunctionField):
        return "field function " + " ".join(field.names)
    raise MixedFields("cannot emit field %r" % (field,))


def _format_law_params(law):
    # jordan laws have 3 eigenvalues, monster laws 4
    if len(law.eigenvalues) == 3:
        return "jordan %s" % _format_coefficient(law.eigenvalues[2])
    return "monster %s %s" % (_format_coefficient(law.eigenvalues[2]),
                              _format_coefficient(law.eigenvalues[3]))


def emit_algebra_file(algebra, axes=()):
    """The deterministic document for an algebra and optional axes."""
    lines = [_format_field(algebra.field),
             "dim %d" % algebra.dim,
             "basis " + " ".join(algebra.basis_names)]
    zero = algebra.field.zero
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            coords = algebra.products[i][j]
            if all(c == zero for c in coords):
                continue
            lines.append("product %s %s = %s"
                         % (algebra.basis_names[i], algebra.basis_names[j],
                            format_element(coords, algebra.basis_names,
                                           zero)))
    for element, law in axes:
        lines.append("axis %s %s"
                     % (_format_law_params(law),
                        format_element(element.coords, algebra.basis_names,
                                       zero)))
    return "\n".join(lines) + "\n"
