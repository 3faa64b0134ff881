"""Finite dimensional commutative algebras given by structure constants.

A ``StructureAlgebra`` stores, over one of the exact fields, the products
of all basis pairs; ``Element`` is a coordinate vector with operator
overloading; ``LinearMap`` is a matrix between two algebras.  On top of
that live the operations the rest of the package is built from: adjoint
action, eigenspaces, subalgebra closure, identity search, ideal
quotients, adjoining an identity, coefficient specialization, and the
isomorphism check used to certify classification outcomes.
"""

from . import linalg
from .scalars import MixedFields


class DimensionMismatch(ValueError):
    pass


class NotProperIdeal(ValueError):
    pass


class StructureAlgebra:
    """Commutative algebra with an explicit multiplication table.

    products[i][j] is the coordinate vector of the product of basis
    elements i and j; the table is stored fully symmetrized.
    """

    def __init__(self, field, basis_names, products):
        self.field = field
        self.basis_names = tuple(basis_names)
        self.dim = len(self.basis_names)
        if len(set(self.basis_names)) != self.dim:
            raise ValueError("duplicate basis names: %r" % (self.basis_names,))
        table = [[None] * self.dim for _ in range(self.dim)]
        for (i, j), coords in products.items():
            coords = [field.coerce(c) for c in coords]
            if len(coords) != self.dim:
                raise DimensionMismatch("product entry (%d, %d) has length %d"
                                        % (i, j, len(coords)))
            if table[i][j] is not None and table[i][j] != coords:
                raise ValueError("conflicting entries for pair (%d, %d)" % (i, j))
            table[i][j] = coords
            table[j][i] = coords
        zero = [field.zero] * self.dim
        for i in range(self.dim):
            for j in range(self.dim):
                if table[i][j] is None:
                    table[i][j] = list(zero)
        self.products = table

    @classmethod
    def from_table(cls, field, basis_names, table):
        """Build from a readable table: (name, name) -> {name: coefficient}.

        Missing pairs are zero; coefficients may be ints or Fractions and
        are coerced into the field.
        """
        basis_names = tuple(basis_names)
        index = {n: i for i, n in enumerate(basis_names)}
        products = {}
        for (a, b), combo in table.items():
            coords = [field.zero] * len(basis_names)
            for name, c in combo.items():
                coords[index[name]] = field.coerce(c)
            products[(index[a], index[b])] = coords
        return cls(field, basis_names, products)

    # -- element construction ------------------------------------------

    @property
    def zero(self):
        return Element(self, [self.field.zero] * self.dim)

    def element(self, coords):
        """Element from a coordinate list or a {basis name: value} mapping."""
        if isinstance(coords, dict):
            vec = [self.field.zero] * self.dim
            index = {n: i for i, n in enumerate(self.basis_names)}
            for name, c in coords.items():
                vec[index[name]] = self.field.coerce(c)
            return Element(self, vec)
        if len(coords) != self.dim:
            raise DimensionMismatch("expected %d coordinates" % self.dim)
        return Element(self, [self.field.coerce(c) for c in coords])

    def gen(self, name):
        i = self.basis_names.index(name)
        vec = [self.field.zero] * self.dim
        vec[i] = self.field.one
        return Element(self, vec)

    def basis(self):
        return [self.gen(n) for n in self.basis_names]

    # -- multiplication -------------------------------------------------

    def multiply_coords(self, u, v):
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if a == self.field.zero:
                continue
            for j, b in enumerate(v):
                if b == self.field.zero:
                    continue
                c = a * b
                row = self.products[i][j]
                for k in range(self.dim):
                    if row[k] != self.field.zero:
                        out[k] = out[k] + c * row[k]
        return out

    def adjoint(self, a):
        """ad_a as a LinearMap: x -> a*x."""
        cols = [self.multiply_coords(a.coords, self.gen(n).coords)
                for n in self.basis_names]
        matrix = linalg.transpose(cols)
        return LinearMap(self, self, matrix)

    def eigenspace(self, m, lam):
        """Basis of ker(m - lam) as elements, deterministic order."""
        shifted = [[m.matrix[i][j] - (lam if i == j else self.field.zero)
                    for j in range(self.dim)] for i in range(self.dim)]
        return [Element(self, v) for v in linalg.kernel_basis(shifted, self.field)]

    # -- structural operations -------------------------------------------

    def subalgebra_closure(self, gens):
        """Echelonized basis of the subalgebra generated by gens."""
        vectors = [g.coords for g in gens]
        basis = linalg.echelon_span(vectors, self.field)
        while True:
            new = list(basis)
            for u in basis:
                for v in basis:
                    new.append(self.multiply_coords(u, v))
            new = linalg.echelon_span(new, self.field)
            if len(new) == len(basis):
                return [Element(self, v) for v in new]
            basis = new

    def find_identity(self):
        """The identity element, or None.  Solves e*b_i = b_i for all i."""
        rows = []
        rhs = []
        for i in range(self.dim):
            for k in range(self.dim):
                rows.append([self.products[j][i][k] for j in range(self.dim)])
                rhs.append(self.field.one if k == i else self.field.zero)
        x = linalg.solve(rows, rhs, self.field)
        return None if x is None else Element(self, x)

    def annihilator(self):
        """Basis of {x : x*A = 0}."""
        rows = []
        for i in range(self.dim):
            for k in range(self.dim):
                rows.append([self.products[j][i][k] for j in range(self.dim)])
        return [Element(self, v) for v in linalg.kernel_basis(rows, self.field)]

    def ideal_closure(self, gens):
        """Echelonized basis of the ideal generated by gens."""
        vectors = [g.coords for g in gens]
        basis = linalg.echelon_span(vectors, self.field)
        while True:
            new = list(basis)
            for u in basis:
                for j in range(self.dim):
                    new.append(self.multiply_coords(u, self.gen(self.basis_names[j]).coords))
            new = linalg.echelon_span(new, self.field)
            if len(new) == len(basis):
                return [Element(self, v) for v in new]
            basis = new

    def quotient(self, gens, keep=None, names=None):
        """Quotient by the ideal generated by gens.

        keep optionally lists the indices of basis elements whose cosets
        form the quotient basis (they must complement the ideal); by
        default the non-pivot columns of the ideal's RREF are kept.
        Returns the quotient StructureAlgebra.
        """
        ideal = [g.coords for g in self.ideal_closure(gens)]
        red, pivots = linalg.rref(ideal, self.field)
        ideal = red[:len(pivots)]
        if len(ideal) == self.dim:
            raise NotProperIdeal("the ideal is the whole algebra")
        if keep is None:
            keep = [c for c in range(self.dim) if c not in pivots]
        if len(keep) + len(ideal) != self.dim:
            raise DimensionMismatch("keep does not complement the ideal")
        # columns: kept representatives then the ideal basis
        cols = []
        for k in keep:
            col = [self.field.zero] * self.dim
            col[k] = self.field.one
            cols.append(col)
        cols.extend(ideal)
        basis_matrix = linalg.transpose(cols)
        if linalg.rank(basis_matrix, self.field) != self.dim:
            raise DimensionMismatch("keep does not complement the ideal")

        def reduce(vec):
            x = linalg.solve(basis_matrix, vec, self.field)
            return x[:len(keep)]

        if names is None:
            names = [self.basis_names[k] for k in keep]
        products = {}
        for a in range(len(keep)):
            for b in range(a, len(keep)):
                prod = self.multiply_coords(self.gen(self.basis_names[keep[a]]).coords,
                                            self.gen(self.basis_names[keep[b]]).coords)
                products[(a, b)] = reduce(prod)
        return StructureAlgebra(self.field, names, products)

    def adjoin_identity(self, name="one"):
        """The algebra with an identity adjoined as the last basis element."""
        if name in self.basis_names:
            raise ValueError("basis name %r already taken" % name)
        names = self.basis_names + (name,)
        n = self.dim
        products = {}
        for i in range(n):
            for j in range(i, n):
                products[(i, j)] = list(self.products[i][j]) + [self.field.zero]
        for i in range(n):
            vec = [self.field.zero] * (n + 1)
            vec[i] = self.field.one
            products[(i, n)] = vec
        last = [self.field.zero] * (n + 1)
        last[n] = self.field.one
        products[(n, n)] = last
        return StructureAlgebra(self.field, names, products)

    def map_coefficients(self, fn, field, names=None):
        """New algebra over field with every structure constant mapped."""
        if names is None:
            names = self.basis_names
        products = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                products[(i, j)] = [fn(c) for c in self.products[i][j]]
        return StructureAlgebra(field, names, products)

    def specialize(self, assignment, field, names=None):
        """Evaluate rational-function structure constants at a point."""
        return self.map_coefficients(lambda c: c.evaluate(assignment, field),
                                     field, names)

    def rebased(self, names, vectors):
        """The same algebra written on a new basis of given elements."""
        if len(names) != self.dim or len(vectors) != self.dim:
            raise DimensionMismatch("need %d basis vectors" % self.dim)
        cols = linalg.transpose([v.coords for v in vectors])
        inv = linalg.invert(cols, self.field)
        products = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                prod = self.multiply_coords(vectors[i].coords,
                                            vectors[j].coords)
                products[(i, j)] = linalg.mat_vec(inv, prod, self.field)
        return StructureAlgebra(self.field, names, products)

    def span_subalgebra(self, vectors, names):
        """The subalgebra on an independent, multiplication-closed span."""
        cols = linalg.transpose([v.coords for v in vectors])
        products = {}
        for i in range(len(vectors)):
            for j in range(i, len(vectors)):
                prod = self.multiply_coords(vectors[i].coords,
                                            vectors[j].coords)
                x = linalg.solve(cols, prod, self.field)
                if x is None:
                    raise ValueError(
                        "the span is not closed under multiplication")
                products[(i, j)] = x
        return StructureAlgebra(self.field, names, products)

    def same_table(self, other):
        """Coefficient-exact comparison of basis names and all products."""
        if self.basis_names != other.basis_names or self.dim != other.dim:
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                if self.products[i][j] != other.products[i][j]:
                    return False
        return True

    def __repr__(self):
        return "StructureAlgebra(%r, dim %d over %r)" % (
            list(self.basis_names), self.dim, self.field)


class Element:
    """A coordinate vector in a StructureAlgebra, with operator syntax."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = list(coords)

    def coeff(self, name):
        return self.coords[self.algebra.basis_names.index(name)]

    def _check(self, other):
        if not isinstance(other, Element):
            return None
        if other.algebra is not self.algebra:
            raise MixedFields("elements of different algebras")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, [a + b for a, b in zip(self.coords, o.coords)])

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, [a - b for a, b in zip(self.coords, o.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra,
                           self.algebra.multiply_coords(self.coords, other.coords))
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, [c * a for a in self.coords])

    def __rmul__(self, other):
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, [c * a for a in self.coords])

    def __truediv__(self, other):
        c = self.algebra.field.coerce(other)
        return Element(self.algebra, [a / c for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra is not self.algebra:
            return False
        return self.coords == other.coords

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def is_zero(self):
        return all(c == self.algebra.field.zero for c in self.coords)

    def __repr__(self):
        parts = []
        for name, c in zip(self.algebra.basis_names, self.coords):
            if c == self.algebra.field.zero:
                continue
            parts.append("%s*%s" % (c, name) if c != self.algebra.field.one
                         else name)
        return " + ".join(parts) if parts else "0"


class LinearMap:
    """A matrix from source to target; columns are images of source basis."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = [list(r) for r in matrix]

    @classmethod
    def from_images(cls, source, target, images):
        """Map sending the i-th source basis element to images[i]."""
        if len(images) != source.dim:
            raise DimensionMismatch("need %d images" % source.dim)
        cols = [im.coords for im in images]
        return cls(source, target, linalg.transpose(cols))

    @classmethod
    def from_pairs(cls, source, target, pairs):
        """The linear map with m(x) = y for every (x, y) pair.

        The x vectors must span the source; redundant pairs must be
        consistent with the map the spanning ones determine.
        """
        field = source.field
        chosen = []
        for x, y in pairs:
            if not linalg.in_span([p.coords for p, _ in chosen], x.coords,
                                  field):
                chosen.append((x, y))
        if len(chosen) != source.dim:
            raise DimensionMismatch("pairs do not span the source")
        basis_matrix = linalg.transpose([x.coords for x, _ in chosen])
        image_matrix = linalg.transpose([y.coords for _, y in chosen])
        inv = linalg.invert(basis_matrix, field)
        m = cls(source, target, linalg.mat_mul(image_matrix, inv, field))
        for x, y in pairs:
            if m(x) != y:
                raise DimensionMismatch("pairs are linearly inconsistent")
        return m

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra,
                   linalg.identity_matrix(algebra.dim, algebra.field))

    def __call__(self, x):
        if x.algebra is not self.source:
            raise MixedFields("element not in the source algebra")
        return Element(self.target,
                       linalg.mat_vec(self.matrix, x.coords, self.target.field))

    def compose(self, other):
        """self after other."""
        if other.target is not self.source:
            raise MixedFields("maps do not compose")
        return LinearMap(other.source, self.target,
                         linalg.mat_mul(self.matrix, other.matrix,
                                        self.target.field))

    def is_identity(self):
        return (self.source is self.target and
                self.matrix == linalg.identity_matrix(self.source.dim,
                                                      self.source.field))

    def is_invertible(self):
        return linalg.rank(self.matrix, self.target.field) == self.source.dim

    def inverse(self):
        inv = linalg.invert(self.matrix, self.target.field)
        if inv is None:
            raise DimensionMismatch("map is singular")
        return LinearMap(self.target, self.source, inv)

    def is_involution(self):
        if self.source is not self.target:
            return False
        sq = linalg.mat_mul(self.matrix, self.matrix, self.target.field)
        return sq == linalg.identity_matrix(self.source.dim, self.source.field)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source is other.source and self.target is other.target
                and self.matrix == other.matrix)

    def __repr__(self):
        return "LinearMap(%d -> %d)" % (self.source.dim, self.target.dim)


def check_linear_map_is_isomorphism(m):
    """Whether m is bijective and multiplicative on all basis pairs."""
    if not m.is_invertible():
        return False
    src = m.source
    for i in range(src.dim):
        bi = src.gen(src.basis_names[i])
        for j in range(i, src.dim):
            bj = src.gen(src.basis_names[j])
            if m(bi * bj) != m(bi) * m(bj):
                return False
    return True
