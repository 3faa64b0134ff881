"""Axis verification, eigenprojections, and Miyamoto involutions.

An axis for a fusion law F is an idempotent a whose adjoint action is
semisimple with spectrum inside F's eigenvalues, whose eigenspace
products respect the star table, and whose 1-eigenspace is spanned by a
itself.  All four conditions are checked over the exact field; failures
are reported, not raised.
"""

from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebra import Element, LinearMap, check_linear_map_is_isomorphism
from .fusion import ODD, find_c2_grading


class NotPrimitive(ValueError):
    pass


class NotSemisimple(ValueError):
    pass


class NoGrading(ValueError):
    pass


@dataclass
class FusionViolation:
    lam: object
    mu: object
    witness: object  # the offending product element

    def __repr__(self):
        return "FusionViolation(%r * %r)" % (self.lam, self.mu)


@dataclass
class AxisReport:
    """Outcome of verify_axis; passed summarises the four conditions."""

    axis: object
    law: object
    is_idempotent: bool
    spectrum_ok: bool
    eigenspaces: list  # (eigenvalue, [Element]) per law eigenvalue
    fusion_violations: list = dc_field(default_factory=list)
    is_primitive: bool = False

    @property
    def passed(self):
        return (self.is_idempotent and self.spectrum_ok
                and not self.fusion_violations and self.is_primitive)

    def eigenspace(self, lam):
        for v, basis in self.eigenspaces:
            if v == lam:
                return basis
        raise KeyError("eigenvalue %r not in the law" % (lam,))

    def summary(self):
        dims = ", ".join("dim A_%s = %d" % (v, len(b))
                         for v, b in self.eigenspaces)
        return ("idempotent=%s spectrum=%s primitive=%s violations=%d (%s)"
                % (self.is_idempotent, self.spectrum_ok, self.is_primitive,
                   len(self.fusion_violations), dims))


def _eigendata(A, a, law):
    ad = A.adjoint(a)
    spaces = []
    for lam in law.eigenvalues:
        lam = A.field.coerce(lam)
        spaces.append((lam, A.eigenspace(ad, lam)))
    return ad, spaces


def verify_axis(A, a, law):
    """Check the four axis conditions for a under law; returns AxisReport."""
    _, spaces = _eigendata(A, a, law)
    is_idem = (a * a == a)
    total = sum(len(b) for _, b in spaces)
    spectrum_ok = (total == A.dim)
    one_basis = spaces[0][1]
    is_primitive = is_idem and len(one_basis) == 1 and not a.is_zero()

    violations = []
    if spectrum_ok:
        # decompose each eigenvector product over the full eigenbasis and
        # require support only on the eigenvalues the star table allows
        full = []
        owner = []
        for idx, (_, basis) in enumerate(spaces):
            for v in basis:
                full.append(v.coords)
                owner.append(idx)
        cols = linalg.transpose(full)
        n = len(law.eigenvalues)
        for i in range(n):
            for j in range(i, n):
                allowed = law.star_indices(i, j)
                for u in spaces[i][1]:
                    for v in spaces[j][1]:
                        prod = u * v
                        x = linalg.solve(cols, prod.coords, A.field)
                        for k, c in enumerate(x):
                            if owner[k] not in allowed and c != A.field.zero:
                                violations.append(FusionViolation(
                                    law.eigenvalues[i], law.eigenvalues[j],
                                    prod))
                                break
                        else:
                            continue
                        break
    return AxisReport(axis=a, law=law, is_idempotent=is_idem,
                      spectrum_ok=spectrum_ok, eigenspaces=spaces,
                      fusion_violations=violations,
                      is_primitive=is_primitive)


def _decompose(A, a, law, v):
    """Coordinates of v over the concatenated eigenbasis of ad_a.

    The 1-eigenspace basis is replaced by [a] so the first coordinate is
    the projection onto the axis.  Requires idempotency, a full spectrum
    and a one dimensional 1-eigenspace.
    """
    if not (a * a == a):
        raise NotPrimitive("%r is not idempotent" % (a,))
    _, spaces = _eigendata(A, a, law)
    if sum(len(b) for _, b in spaces) != A.dim:
        raise NotSemisimple("adjoint of %r is not semisimple over the law"
                            % (a,))
    if len(spaces[0][1]) != 1:
        raise NotPrimitive("1-eigenspace of %r has dimension %d"
                           % (a, len(spaces[0][1])))
    spaces = [(spaces[0][0], [a])] + spaces[1:]
    full = []
    owner = []
    for idx, (_, basis) in enumerate(spaces):
        for u in basis:
            full.append(u.coords)
            owner.append(idx)
    cols = linalg.transpose(full)
    x = linalg.solve(cols, v.coords, A.field)
    if x is None:
        raise NotSemisimple("eigenbasis of %r does not span" % (a,))
    return spaces, owner, x


def projection(A, a, law, v):
    """The coefficient of a in the eigendecomposition of v."""
    _, _, x = _decompose(A, a, law, v)
    return x[0]


def component(A, a, law, v, lams):
    """The part of v lying in the eigenspaces for the eigenvalues lams."""
    spaces, owner, x = _decompose(A, a, law, v)
    flat = [u for _, basis in spaces for u in basis]
    out = A.zero
    want = set()
    for lam in lams:
        for idx, (val, _) in enumerate(spaces):
            if val == lam:
                want.add(idx)
    for k, u in enumerate(flat):
        if owner[k] in want:
            out = out + x[k] * u
    return out


def in_part(A, a, law, v, lams):
    """Whether v lies in the sum of the eigenspaces for lams."""
    return component(A, a, law, v, lams) == v


def miyamoto(A, a, law, grading=None):
    """The Miyamoto map of a: +1 on even, -1 on odd eigenspaces.

    The law must carry a C2 grading (the preferred one is computed when
    none is passed); the result is asserted to be an algebra automorphism
    and is an involution whenever an odd eigenspace is nonzero.
    """
    if grading is None:
        grading = find_c2_grading(law)
    if grading is None:
        raise NoGrading("law %r has no nontrivial C2 grading" % (law,))
    _, spaces = _eigendata(A, a, law)
    if sum(len(b) for _, b in spaces) != A.dim:
        raise NotSemisimple("adjoint of %r is not semisimple over the law"
                            % (a,))
    images = []
    vectors = []
    for (lam, basis) in spaces:
        s = grading.sign(lam)
        for v in basis:
            vectors.append(v.coords)
            images.append(v.coords if s != ODD else [-c for c in v.coords])
    c_mat = linalg.transpose(vectors)
    c_inv = linalg.invert(c_mat, A.field)
    d_c_inv = linalg.mat_mul(linalg.transpose(images), c_inv, A.field)
    tau = LinearMap(A, A, d_c_inv)
    if not is_automorphism(A, tau):
        raise NotSemisimple("Miyamoto map of %r is not an automorphism" % (a,))
    return tau


def is_automorphism(A, m):
    """Bijective and multiplicative self-map of A."""
    if m.source is not A or m.target is not A:
        return False
    return check_linear_map_is_isomorphism(m)
