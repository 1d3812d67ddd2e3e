"""Alternating forms on a Lie algebra and the Chevalley-Eilenberg calculus.

Conventions are fixed once and for all:

* wedge is the shuffle (determinant) convention, without 1/k! factors, so
  that on the dual basis (e^I)(e_I) = 1;
* on 1-forms the differential is d(alpha) = -alpha([.,.]), and in general
  d(alpha)(X_0..X_k) = sum_{i<j} (-1)^{i+j} alpha([X_i,X_j], ..hat i..hat j..);
* the twisted differential is d_lam(alpha) = d(alpha) - lam ^ alpha.
"""

from __future__ import annotations

from itertools import combinations

from . import linalg
from .scalars import Scalar


class FormError(Exception):
    pass


class AmbientMismatch(FormError):
    pass


class DegreeZero(FormError):
    pass


class NonClosedLambda(FormError):
    pass


class NoSolution(FormError):
    pass


class GaugeUnresolvable(FormError):
    pass


def _merge_sign(left, right):
    """Sign of sorting the concatenation of two increasing index tuples.

    Returns (sorted tuple, sign) or (None, 0) when an index repeats.
    """
    if set(left) & set(right):
        return None, 0
    merged = tuple(sorted(left + right))
    # count inversions of the concatenation
    seq = left + right
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return merged, (-1) ** inv


class KForm:
    """Alternating k-form with Scalar coefficients, sparsely stored.

    Coefficients are keyed by strictly increasing index tuples; a 0-form is
    keyed by the empty tuple.
    """

    __slots__ = ("algebra", "degree", "coeffs")

    def __init__(self, algebra, degree, coeffs=None):
        self.algebra = algebra
        self.degree = int(degree)
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != self.degree:
                raise FormError(f"index tuple {idx} has wrong length")
            if list(idx) != sorted(set(idx)):
                raise FormError(f"index tuple {idx} is not strictly increasing")
            if not c.is_zero():
                clean[idx] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, algebra, degree):
        return cls(algebra, degree, {})

    @classmethod
    def monomial(cls, algebra, idx, coeff=None):
        if coeff is None:
            coeff = algebra.one()
        return cls(algebra, len(idx), {tuple(idx): coeff})

    @classmethod
    def basis_oneform(cls, algebra, i):
        return cls.monomial(algebra, (i,))

    @classmethod
    def constant(cls, algebra, value):
        if not isinstance(value, Scalar):
            value = algebra._scalar(value)
        return cls(algebra, 0, {(): value})

    # -- basics -------------------------------------------------------

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise AmbientMismatch("forms live on different algebras")

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._check(other)
        if self.degree != other.degree:
            raise FormError("cannot add forms of different degree")
        coeffs = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            coeffs[idx] = coeffs.get(idx, self.algebra.zero()) + c
        return KForm(self.algebra, self.degree, coeffs)

    def __neg__(self):
        return KForm(self.algebra, self.degree,
                     {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        if not isinstance(c, Scalar):
            c = self.algebra._scalar(c)
        return KForm(self.algebra, self.degree,
                     {i: c * v for i, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scaled(c)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("KForm is not hashable")

    def coefficient(self, idx):
        return self.coeffs.get(tuple(idx), self.algebra.zero())

    def evaluate(self, *vectors):
        """Evaluate on vectors (shuffle convention: determinant of duals)."""
        if len(vectors) != self.degree:
            raise FormError(
                f"degree {self.degree} form applied to {len(vectors)} vectors")
        if self.degree == 0:
            return self.coeffs.get((), self.algebra.zero())
        total = self.algebra.zero()
        for idx, c in self.coeffs.items():
            sub = [[v[i] for v in vectors] for i in idx]
            total = total + c * linalg.det(sub)
        return total

    def __str__(self):
        if self.is_zero():
            return "0"
        names = self.algebra.basis_names
        parts = []
        for idx in sorted(self.coeffs):
            c = self.coeffs[idx]
            mono = "^".join(names[i] for i in idx) if idx else "1"
            parts.append(f"({c})*{mono}" if idx else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"KForm[{self.degree}]({self})"


def wedge(alpha, beta):
    """Graded-commutative shuffle-convention wedge product."""
    alpha._check(beta)
    coeffs = {}
    g = alpha.algebra
    for i1, c1 in alpha.coeffs.items():
        for i2, c2 in beta.coeffs.items():
            merged, sign = _merge_sign(i1, i2)
            if merged is None:
                continue
            term = c1 * c2 if sign == 1 else -(c1 * c2)
            coeffs[merged] = coeffs.get(merged, g.zero()) + term
    return KForm(g, alpha.degree + beta.degree, coeffs)


def wedge_power(alpha, k):
    out = KForm.constant(alpha.algebra, 1)
    for _ in range(k):
        out = wedge(out, alpha)
    return out


def _d_basis_oneform(g, k):
    """d(e^k) = -sum_{i<j} c_{ij}^k e^i ^ e^j."""
    coeffs = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            c = g.bracket_basis(i, j)[k]
            if not c.is_zero():
                coeffs[(i, j)] = -c
    return KForm(g, 2, coeffs)


def ce_d(alpha):
    """Chevalley-Eilenberg differential (anti-derivation extension)."""
    g = alpha.algebra
    if alpha.degree == 0:
        return KForm.zero(g, 1)
    out = KForm.zero(g, alpha.degree + 1)
    for idx, c in alpha.coeffs.items():
        for a, i in enumerate(idx):
            rest_left = KForm.monomial(g, idx[:a], g.one())
            rest_right = KForm.monomial(g, idx[a + 1:], g.one())
            piece = wedge(wedge(rest_left, _d_basis_oneform(g, i)), rest_right)
            sign = (-1) ** a
            out = out + piece.scaled(c if sign == 1 else -c)
    return out


def twisted_d(alpha, lam, warn=None):
    """d_lam(alpha) = d(alpha) - lam ^ alpha.  lam should be closed."""
    if lam.degree != 1:
        raise FormError("twisting form must have degree 1")
    if warn is not None and not ce_d(lam).is_zero():
        warn("twisting 1-form is not closed; d_lam does not square to zero")
    return ce_d(alpha) - wedge(lam, alpha)


def interior(v, alpha):
    """Interior product: (i_v alpha)(X..) = alpha(v, X..)."""
    g = alpha.algebra
    if alpha.degree == 0:
        raise DegreeZero("interior product of a 0-form")
    coeffs = {}
    for idx, c in alpha.coeffs.items():
        for a, i in enumerate(idx):
            if v[i].is_zero():
                continue
            rest = idx[:a] + idx[a + 1:]
            term = v[i] * c
            if a % 2 == 1:
                term = -term
            coeffs[rest] = coeffs.get(rest, g.zero()) + term
    return KForm(g, alpha.degree - 1, coeffs)


def lie_derivative(v, alpha):
    """Cartan formula L_v = d o i_v + i_v o d."""
    if alpha.degree == 0:
        return interior(v, ce_d(alpha))
    return ce_d(interior(v, alpha)) + interior(v, ce_d(alpha))


def dual_pairing(alpha, v):
    """Evaluate a 1-form on a vector."""
    if alpha.degree != 1:
        raise FormError("pairing requires a 1-form")
    g = alpha.algebra
    total = g.zero()
    for (i,), c in alpha.coeffs.items():
        total = total + c * v[i]
    return total


# ---------------------------------------------------------------------------
# Relative complex C^k(g, h) and twisted cohomology
# ---------------------------------------------------------------------------

def form_monomials(g, k):
    return list(combinations(range(g.dim), k))


def form_to_vector(alpha, monomials):
    return [alpha.coefficient(idx) for idx in monomials]


def vector_to_form(g, k, monomials, vec):
    return KForm(g, k, dict(zip(monomials, vec)))


def relative_basis(g, k):
    """Basis of C^k(g,h): forms vanishing on h and infinitesimally invariant.

    With no distinguished subalgebra this is all of Lambda^k.
    """
    monos = form_monomials(g, k)
    if not monos:
        return []
    h_vectors = g.h_subalgebra or []
    if not h_vectors:
        return [KForm.monomial(g, idx) for idx in monos]
    rows = []
    lower = form_monomials(g, k - 1) if k >= 1 else []
    for X in h_vectors:
        # linear constraints i_X(alpha) = 0 and L_X(alpha) = 0
        for target, op in (
                (lower, lambda f: interior(X, f) if k >= 1 else None),
                (monos, lambda f: lie_derivative(X, f))):
            images = []
            for idx in monos:
                f = op(KForm.monomial(g, idx))
                if f is None:
                    images = None
                    break
                images.append(form_to_vector(f, target))
            if images is None:
                continue
            for col in range(len(target)):
                rows.append([images[m][col] for m in range(len(monos))])
    if not rows:
        return [KForm.monomial(g, idx) for idx in monos]
    kernel, _ = linalg.nullspace(rows, g.zero())
    return [vector_to_form(g, k, monos, v) for v in kernel]


def _twisted_d_rank(g, lam, k):
    basis = relative_basis(g, k)
    if not basis:
        return 0, 0, []
    target = form_monomials(g, k + 1)
    rows = [form_to_vector(twisted_d(b, lam), target) for b in basis]
    r, locus = linalg.rank(rows)
    return len(basis), r, locus


def twisted_cohomology_dim(g, lam, k):
    """dim H^k_lam(g,h) with the generic-locus annotation.

    Requires the twisting form to be closed.
    """
    if not ce_d(lam).is_zero():
        raise NonClosedLambda("twisting 1-form is not closed")
    dim_k, rank_k, locus = _twisted_d_rank(g, lam, k)
    dim_ker = dim_k - rank_k
    dim_im = 0
    if k >= 1:
        _, dim_im, locus2 = _twisted_d_rank(g, lam, k - 1)
        linalg.merge_locus(locus, locus2)
    return dim_ker - dim_im, locus


def solve_potential(omega, lam, gauge=None):
    """Solve d_lam(phi) = omega for phi in C^1(g,h).

    When a gauge vector xi is supplied, the representative with phi(xi) = 0
    is returned (raising GaugeUnresolvable when the solution set does not
    meet that hyperplane).
    """
    g = omega.algebra
    basis = relative_basis(g, 1)
    target = form_monomials(g, 2)
    columns = [form_to_vector(twisted_d(b, lam), target) for b in basis]
    # build the system column-wise: A x = omega
    rows = [[columns[j][i] for j in range(len(basis))]
            for i in range(len(target))]
    rhs = form_to_vector(omega, target)
    x, kernel, _ = linalg.solve(rows, rhs, g.zero())
    if x is None:
        raise NoSolution("the twisted class of omega is nonzero")

    def build(coeffvec):
        phi = KForm.zero(g, 1)
        for c, b in zip(coeffvec, basis):
            phi = phi + b.scaled(c)
        return phi

    phi = build(x)
    if gauge is None:
        return phi
    val = dual_pairing(phi, gauge)
    if val.is_zero():
        return phi
    # adjust along the kernel of d_lam on C^1 to impose phi(gauge) = 0
    for kv in kernel:
        kform = build(kv)
        kval = dual_pairing(kform, gauge)
        if not kval.is_zero():
            return phi - kform.scaled(val / kval)
    raise GaugeUnresolvable(
        "every gauge form vanishes on the gauge vector; cannot fix phi")
