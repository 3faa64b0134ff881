"""Exact scalar arithmetic: rationals, odd prime fields, and multivariate
rational functions over the rationals.

Every computation in this package is exact.  The three element kinds are

* ``fractions.Fraction`` for the rationals,
* ``PrimeFieldElement`` for F_p with p an odd prime,
* ``RationalFunction`` (a quotient of two ``MultiPoly``) for function
  fields such as Q(alpha, beta, l1, l1f).

A field descriptor (``QQ``, ``PrimeField(p)``, ``FunctionField(names)``)
carries zero, one, the characteristic, coercion from integers and
rationals, and symbol lookup for the expression parser.

Rational functions are deliberately not reduced to lowest terms; equality
is decided by cross multiplication and only the integer content is
stripped to bound coefficient growth.
"""

from fractions import Fraction
from math import gcd

Rational = Fraction

SKEW_SYMBOLS = ("alpha", "beta", "l1", "l1f", "l2f", "zeta", "theta", "kappa")


class MixedFields(TypeError):
    """Raised when elements of distinct fields meet in one operation."""


class DivisionByZero(ZeroDivisionError):
    """Raised on inversion of zero or coercion with vanishing denominator."""


class DenominatorVanishes(ZeroDivisionError):
    """Raised when evaluating a rational function at a pole."""


class UnboundSymbol(ValueError):
    """Raised when an expression names a symbol the context does not bind."""


class BadField(ValueError):
    """Raised for p = 2, composite p, or duplicate function-field symbols."""


class NonlinearExpression(ValueError):
    """Raised when a linear solve meets degree two or higher."""


class ExprError(ValueError):
    """Raised on malformed scalar or element expressions."""

    def __init__(self, message, pos=None):
        super().__init__(message)
        self.pos = pos


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeFieldElement:
    """A residue in F_p, p an odd prime.  Mixes freely with int and Fraction."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise MixedFields("cannot mix F_%d and F_%d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DivisionByZero(
                    "denominator of %s vanishes modulo %d" % (other, self.p))
            inv = pow(other.denominator % self.p, -1, self.p)
            return PrimeFieldElement(other.numerator * inv, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise DivisionByZero("division by zero in F_%d" % self.p)
        return PrimeFieldElement(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.value == 0:
            raise DivisionByZero("division by zero in F_%d" % self.p)
        return PrimeFieldElement(o.value * pow(self.value, -1, self.p), self.p)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.value == 0:
            raise DivisionByZero("division by zero in F_%d" % self.p)
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                o = self._lift(Fraction(other))
            except DivisionByZero:
                return False
            return self.value == o.value
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return str(self.value)


def _term_key(exps):
    # graded order: total degree first, then exponent tuple, both descending
    return (-sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Sparse multivariate polynomial over Q with a fixed symbol tuple.

    Terms map exponent tuples to nonzero Fractions.  Two polynomials only
    combine when their symbol tuples agree exactly.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names, terms):
        self.names = tuple(names)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def constant(cls, names, value):
        value = Fraction(value)
        zero = (0,) * len(names)
        return cls(names, {zero: value} if value else {})

    @classmethod
    def variable(cls, names, name):
        if name not in names:
            raise UnboundSymbol("unknown symbol %r" % name)
        exps = tuple(1 if n == name else 0 for n in names)
        return cls(names, {exps: Fraction(1)})

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise MixedFields("polynomial symbol tuples differ: %r vs %r"
                                  % (self.names, other.names))
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.names, other)
        return None

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        zero = (0,) * len(self.names)
        return self.terms.get(zero, Fraction(0))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.names, terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.names, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = MultiPoly.constant(self.names, 1)
        for _ in range(n):
            out = out * self
        return out

    def __neg__(self):
        return MultiPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def degree_in(self, name):
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coefficient_of(self, name, k):
        """The coefficient polynomial of name**k (the symbol is divided out)."""
        i = self.names.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == k:
                reduced = e[:i] + (0,) + e[i + 1:]
                terms[reduced] = terms.get(reduced, Fraction(0)) + c
        return MultiPoly(self.names, terms)

    def content(self):
        """Positive rational c with self/c integral and primitive."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def leading_coefficient(self):
        if not self.terms:
            return Fraction(0)
        e = min(self.terms, key=_term_key)
        return self.terms[e]

    def evaluate(self, assignment, field):
        """Evaluate with symbols bound to elements of field."""
        for n in self.names:
            if any(e[self.names.index(n)] for e in self.terms) and n not in assignment:
                raise UnboundSymbol("symbol %r is unbound" % n)
        total = field.zero
        for e, c in self.terms.items():
            v = field.coerce(c)
            for n, k in zip(self.names, e):
                if k:
                    v = v * assignment[n] ** k
            total = total + v
        return total

    def substitute(self, sub):
        """Replace symbols by rational functions (same symbol tuple)."""
        out = RationalFunction.constant(self.names, 0)
        for e, c in self.terms.items():
            v = RationalFunction.constant(self.names, c)
            for n, k in zip(self.names, e):
                if k:
                    f = sub.get(n)
                    if f is None:
                        f = RationalFunction.symbol(self.names, n)
                    v = v * f ** k
            out = out + v
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_term_key):
            c = self.terms[e]
            factors = []
            for n, k in zip(self.names, e):
                if k == 1:
                    factors.append(n)
                elif k > 1:
                    factors.append("%s^%d" % (n, k))
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(c)) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text


def _frac_gcd(a, b):
    if a == 0:
        return b
    if b == 0:
        return a
    num = gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return Fraction(num, den)


class RationalFunction:
    """Quotient of two MultiPoly, not reduced to lowest terms.

    Construction strips the common integer content and normalizes the sign
    of the denominator's leading coefficient; equality cross-multiplies.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = MultiPoly.constant(num.names, 1)
        if num.names != den.names:
            raise MixedFields("numerator and denominator symbol tuples differ")
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = MultiPoly.constant(num.names, 1)
        else:
            scale = _frac_gcd(num.content(), den.content())
            if scale != 1:
                inv = 1 / scale
                num = num * inv
                den = den * inv
        if den.leading_coefficient() < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, names, value):
        return cls(MultiPoly.constant(names, value))

    @classmethod
    def symbol(cls, names, name):
        return cls(MultiPoly.variable(names, name))

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.num.names != self.num.names:
                raise MixedFields("function-field symbol tuples differ")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.num.names, other)
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.num.is_zero():
                raise DivisionByZero("inverting the zero rational function")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def evaluate(self, assignment, field):
        """Evaluate at a point; raises DenominatorVanishes at poles."""
        den = self.den.evaluate(assignment, field)
        if den == field.zero:
            raise DenominatorVanishes("denominator vanishes at %r" % (assignment,))
        return self.num.evaluate(assignment, field) / den

    def substitute(self, sub):
        den = self.den.substitute(sub)
        if den.is_zero():
            raise DenominatorVanishes("denominator vanishes under substitution")
        return self.num.substitute(sub) / den

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return "(%s)/(%s)" % (self.num, self.den)


def rf_equal(f, g):
    """Equality of rational functions by cross multiplication."""
    return f == g


def solve_linear(expr, name):
    """Solve expr = 0 for a symbol occurring at most linearly.

    Only the numerator matters.  Returns the solution as a
    RationalFunction; raises NonlinearExpression on degree >= 2 and
    DivisionByZero when the symbol does not occur.
    """
    num = expr.num
    if num.degree_in(name) >= 2:
        raise NonlinearExpression("%r appears with degree >= 2" % name)
    a1 = num.coefficient_of(name, 1)
    a0 = num.coefficient_of(name, 0)
    if a1.is_zero():
        raise DivisionByZero("%r does not occur linearly in %r" % (name, expr))
    return RationalFunction(-a0, a1)


class RationalField:
    """Descriptor for Q; elements are fractions.Fraction."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise MixedFields("cannot coerce %r into Q" % (x,))

    def symbols(self):
        return {}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """Descriptor for F_p, p an odd prime."""

    def __init__(self, p):
        if not _is_prime(p):
            raise BadField("%d is not prime" % p)
        if p == 2:
            raise BadField("characteristic 2 is not supported")
        self.p = p
        self.char = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise MixedFields("cannot coerce F_%d into F_%d" % (x.p, self.p))
            return x
        if isinstance(x, (int, Fraction)):
            return self.zero._lift(Fraction(x))
        raise MixedFields("cannot coerce %r into F_%d" % (x, self.p))

    def symbols(self):
        return {}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "F_%d" % self.p


class FunctionField:
    """Descriptor for Q(names); elements are RationalFunction."""

    char = 0

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise BadField("duplicate function-field symbols: %r" % (names,))
        if not names:
            raise BadField("a function field needs at least one symbol")
        self.names = names
        self.zero = RationalFunction.constant(names, 0)
        self.one = RationalFunction.constant(names, 1)

    def sym(self, name):
        return RationalFunction.symbol(self.names, name)

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            if x.num.names != self.names:
                raise MixedFields("function-field symbol tuples differ")
            return x
        if isinstance(x, MultiPoly):
            if x.names != self.names:
                raise MixedFields("function-field symbol tuples differ")
            return RationalFunction(x)
        if isinstance(x, (int, Fraction)):
            return RationalFunction.constant(self.names, x)
        raise MixedFields("cannot coerce %r into Q%r" % (x, (self.names,)))

    def symbols(self):
        return {n: self.sym(n) for n in self.names}

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.names == self.names

    def __hash__(self):
        return hash(("FF",) + self.names)

    def __repr__(self):
        return "QQ(%s)" % ", ".join(self.names)


def skew_field():
    """The fixed eight-symbol context used by the generic skew algebra."""
    return FunctionField(SKEW_SYMBOLS)


# ---------------------------------------------------------------------------
# expression parsing
#
# grammar:  sum    := product (('+'|'-') product)*
#           product:= unary (('*'|'/') unary)*
#           unary  := '-' unary | power
#           power  := atom ('^' INT)*            (left associative)
#           atom   := INT | NAME | '(' sum ')'
# so ^ binds tighter than unary minus, which binds tighter than * and /.

_OPS = set("+-*/^()")


def tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(("OP", ch, i))
            i += 1
            continue
        raise ExprError("unexpected character %r" % ch, pos=i)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens, field, names):
        self.tokens = tokens
        self.k = 0
        self.field = field
        self.names = names

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        t = self.tokens[self.k]
        self.k += 1
        return t

    def expect_op(self, ch):
        kind, text, pos = self.next()
        if kind != "OP" or text != ch:
            raise ExprError("expected %r" % ch, pos=pos)

    def sum(self):
        v = self.product()
        while True:
            kind, text, _ = self.peek()
            if kind == "OP" and text in "+-":
                self.next()
                w = self.product()
                v = v + w if text == "+" else v - w
            else:
                return v

    def product(self):
        v = self.unary()
        while True:
            kind, text, pos = self.peek()
            if kind == "OP" and text in "*/":
                self.next()
                w = self.unary()
                if text == "*":
                    v = v * w
                else:
                    try:
                        v = v / w
                    except ZeroDivisionError:
                        raise DivisionByZero("division by zero at position %d" % pos)
            else:
                return v

    def unary(self):
        kind, text, _ = self.peek()
        if kind == "OP" and text == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        while True:
            kind, text, _ = self.peek()
            if kind == "OP" and text == "^":
                self.next()
                kind, text, pos = self.next()
                if kind != "INT":
                    raise ExprError("exponent must be a nonnegative integer",
                                    pos=pos)
                v = v ** int(text)
            else:
                return v

    def atom(self):
        kind, text, pos = self.next()
        if kind == "INT":
            return self.field.coerce(int(text))
        if kind == "NAME":
            if text not in self.names:
                raise UnboundSymbol("unknown symbol %r" % text)
            return self.names[text]
        if kind == "OP" and text == "(":
            v = self.sum()
            self.expect_op(")")
            return v
        raise ExprError("unexpected token %r" % (text or kind), pos=pos)


def parse_expression(text, field, names):
    """Parse text against a symbol table; INT literals coerce into field."""
    p = _Parser(tokenize(text), field, names)
    v = p.sum()
    kind, tok, pos = p.peek()
    if kind != "END":
        raise ExprError("trailing input %r" % tok, pos=pos)
    return v


def parse_scalar(text, field):
    """Parse a coefficient expression into an element of field."""
    return parse_expression(text, field, field.symbols())
