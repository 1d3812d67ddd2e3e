"""Lie algebras with exact structure constants, subspaces and derivations."""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .scalars import Scalar


class LieError(Exception):
    pass


class ZeroVector(LieError):
    pass


class NotADerivation(LieError):
    pass


class JacobiReport:
    """Outcome of the antisymmetry + Jacobi check."""

    def __init__(self, passed, witness=None, reason=""):
        self.passed = passed
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "JacobiReport(pass)"
        return f"JacobiReport(fail, {self.reason} at {self.witness})"


class LieAlgebra:
    """Finite-dimensional Lie algebra over the scalar field Q(params).

    The bracket table stores [e_i, e_j] as a coefficient vector for every
    ordered pair; pairs given only one way are completed antisymmetrically,
    so deliberately corrupted tables can violate antisymmetry and be caught
    by check_jacobi.
    """

    def __init__(self, basis_names, brackets, params=(), h_subalgebra=None,
                 name=""):
        self.name = name
        self.params = tuple(params)
        self.basis_names = list(basis_names)
        self.dim = len(self.basis_names)
        table = {}
        for (i, j), vec in brackets.items():
            table[(i, j)] = [self._scalar(c) for c in self._as_vector(vec)]
        for (i, j) in list(table):
            if (j, i) not in table:
                table[(j, i)] = [-c for c in table[(i, j)]]
        self._table = table
        self.h_subalgebra = None
        if h_subalgebra:
            self.h_subalgebra = [
                [self._scalar(c) for c in v] for v in h_subalgebra]

    # -- scalar plumbing ----------------------------------------------

    def _scalar(self, c):
        if isinstance(c, Scalar):
            if c.params != self.params:
                raise LieError("scalar parameter mismatch")
            return c
        return Scalar.const(self.params, Fraction(c))

    def _as_vector(self, vec):
        if isinstance(vec, dict):
            out = [0] * self.dim
            for k, c in vec.items():
                out[k] = c
            return out
        return list(vec)

    def zero(self):
        return Scalar.zero(self.params)

    def one(self):
        return Scalar.one(self.params)

    def zero_vector(self):
        return [self.zero()] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.one()
        return v

    def vector(self, entries):
        return [self._scalar(c) for c in self._as_vector(entries)]

    # -- bracket ------------------------------------------------------

    def bracket_basis(self, i, j):
        if (i, j) in self._table:
            return list(self._table[(i, j)])
        return self.zero_vector()

    def bracket(self, x, y):
        out = self.zero_vector()
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                b = self.bracket_basis(i, j)
                for k in range(self.dim):
                    if not b[k].is_zero():
                        out[k] = out[k] + xi * yj * b[k]
        return out

    def ad(self, v):
        """Matrix of ad_v: column j is [v, e_j]."""
        cols = [self.bracket(v, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    # -- structural checks --------------------------------------------

    def check_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                lhs = self.bracket_basis(i, j)
                rhs = self.bracket_basis(j, i)
                if any(not (a + b).is_zero() for a, b in zip(lhs, rhs)):
                    return JacobiReport(False, (i, j), "antisymmetry fails")
                if i == j and any(not c.is_zero() for c in lhs):
                    return JacobiReport(False, (i, i), "[x,x] != 0")
        for i in range(n):
            ei = self.basis_vector(i)
            for j in range(i + 1, n):
                ej = self.basis_vector(j)
                for k in range(j + 1, n):
                    ek = self.basis_vector(k)
                    s = self.bracket(self.bracket(ei, ej), ek)
                    s = linalg.vec_add(s, self.bracket(self.bracket(ej, ek), ei))
                    s = linalg.vec_add(s, self.bracket(self.bracket(ek, ei), ej))
                    if not linalg.vec_is_zero(s):
                        return JacobiReport(False, (i, j, k), "Jacobi fails")
        if self.h_subalgebra:
            h = Subspace(self, self.h_subalgebra)
            for a, x in enumerate(self.h_subalgebra):
                for y in self.h_subalgebra[a:]:
                    if not h.contains(self.bracket(x, y)):
                        return JacobiReport(
                            False, "h", "h is not closed under the bracket")
        return JacobiReport(True)

    def structure_table(self):
        """Canonical bracket table for golden data / round-tripping."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vec = self.bracket_basis(i, j)
                if any(not c.is_zero() for c in vec):
                    out[(i, j)] = vec
        return out


class Subspace:
    """Subspace of a Lie algebra given by a spanning set of column vectors."""

    def __init__(self, ambient, span, locus=None):
        self.ambient = ambient
        self.span = [list(v) for v in span]
        self.locus = list(locus or [])

    @property
    def dim(self):
        if not self.span:
            return 0
        r, _ = linalg.rank(self.span)
        return r

    def contains(self, v):
        return linalg.in_span(self.span, v, self.ambient.zero())


class Derivation:
    """A dim x dim matrix satisfying the Leibniz identity (checked on use)."""

    def __init__(self, algebra, matrix):
        self.algebra = algebra
        self.matrix = [[algebra._scalar(c) for c in row] for row in matrix]
        if len(self.matrix) != algebra.dim or any(
                len(r) != algebra.dim for r in self.matrix):
            raise LieError("derivation matrix has wrong shape")

    def apply(self, v):
        return linalg.mat_vec(self.matrix, v)


def is_derivation(g, matrix):
    """Leibniz check D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    if not isinstance(matrix, Derivation):
        matrix = Derivation(g, matrix)
    D = matrix
    for i in range(g.dim):
        ei = g.basis_vector(i)
        for j in range(i + 1, g.dim):
            ej = g.basis_vector(j)
            lhs = D.apply(g.bracket(ei, ej))
            rhs = linalg.vec_add(g.bracket(D.apply(ei), ej),
                                 g.bracket(ei, D.apply(ej)))
            if not linalg.vec_is_zero(linalg.vec_sub(lhs, rhs)):
                return False, (i, j)
    return True, None


def centralizer(g, v):
    """Nullspace of ad_v as a subspace; v must be nonzero."""
    if linalg.vec_is_zero(v):
        raise ZeroVector("centralizer of the zero vector")
    basis, locus = linalg.nullspace(g.ad(v), g.zero())
    return Subspace(g, basis, locus)


def center(g):
    """Intersection of the nullspaces of all ad_{e_i}."""
    stacked = []
    for i in range(g.dim):
        stacked.extend(g.ad(g.basis_vector(i)))
    if not stacked:
        return Subspace(g, [g.basis_vector(i) for i in range(g.dim)])
    basis, locus = linalg.nullspace(stacked, g.zero())
    return Subspace(g, basis, locus)


def derived_subalgebra(g):
    """Span of all brackets [e_i, e_j]."""
    vectors = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            b = g.bracket_basis(i, j)
            if any(not c.is_zero() for c in b):
                vectors.append(b)
    red, pivots, _ = linalg.rref(vectors) if vectors else ([], [], [])
    return Subspace(g, [red[r] for r in range(len(pivots))])


def extend_by_derivation(g, D, new_name="D"):
    """The extension with basis (D, e_1..e_n): [D, x] = Dx.

    Returns the extended algebra and the closed dual 1-form lam with
    lam(D) = 1, lam(g) = 0.  Closedness of lam is asserted post hoc.
    """
    if not isinstance(D, Derivation):
        D = Derivation(g, D)
    ok, witness = is_derivation(g, D)
    if not ok:
        raise NotADerivation(f"Leibniz identity fails on basis pair {witness}")
    n = g.dim
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = g.bracket_basis(i, j)
            brackets[(i + 1, j + 1)] = {k + 1: c for k, c in enumerate(vec)
                                        if not c.is_zero()}
    for j in range(n):
        col = [D.matrix[k][j] for k in range(n)]
        brackets[(0, j + 1)] = {k + 1: c for k, c in enumerate(col)
                                if not c.is_zero()}
    h_sub = None
    if g.h_subalgebra:
        h_sub = [[g.zero()] + list(v) for v in g.h_subalgebra]
    ext = LieAlgebra([new_name] + list(g.basis_names), brackets,
                     params=g.params, h_subalgebra=h_sub,
                     name=f"{g.name}(D)" if g.name else "extension")
    from .exterior import KForm, ce_d
    lam = KForm.monomial(ext, (0,), ext.one())
    if not ce_d(lam).is_zero():
        raise NotADerivation("dual form of D is not closed")
    return ext, lam
