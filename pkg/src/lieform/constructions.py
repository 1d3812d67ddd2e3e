"""Coadjoint-orbit machinery: Kirillov-Kostant form, stabilizer, and the
orbit-plus-derivation construction of homogeneous lcs data."""

from __future__ import annotations

from . import linalg
from .exterior import KForm, ce_d, dual_pairing, wedge
from .lie_core import Derivation, LieAlgebra, Subspace, extend_by_derivation
from .structures import StructureError, lcs_check


class ConstructionError(StructureError):
    pass


class ZeroForm(ConstructionError):
    pass


class ConicalOrbit(ConstructionError):
    pass


class DegenerateOnQuotient(ConstructionError):
    pass


class OrbitData:
    """Stabilizer data of a 1-form in the coadjoint representation.

    k is the stabilizer {X : phi o ad_X = 0}, h = k intersect ker(phi), and
    omega_Q(X, Y) = phi([X, Y]) is the Kirillov-Kostant form with kernel k.
    """

    def __init__(self, g_prime, phi_prime, k, h, omega_Q, non_conical):
        self.g_prime = g_prime
        self.phi_prime = phi_prime
        self.k = k
        self.h = h
        self.omega_Q = omega_Q
        self.non_conical = non_conical


def kirillov_kostant_form(g, phi):
    """omega_Q(X, Y) = phi([X, Y]) as a 2-form."""
    coeffs = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            c = dual_pairing(phi, g.bracket_basis(i, j))
            if not c.is_zero():
                coeffs[(i, j)] = c
    return KForm(g, 2, coeffs)


def coadjoint_stabilizer(g, phi):
    """Stabilizer of phi under the coadjoint action, with orbit data.

    Uses omega_Q(X, .) = -phi o ad_X: the stabilizer is the kernel of the
    Kirillov-Kostant form.
    """
    if phi.is_zero():
        raise ZeroForm("coadjoint stabilizer of the zero form")
    n = g.dim
    omega_Q = kirillov_kostant_form(g, phi)
    # rows: j-th condition phi([x, e_j]) = 0 for x = sum x_i e_i
    rows = [[dual_pairing(phi, g.bracket_basis(i, j)) for i in range(n)]
            for j in range(n)]
    kbasis, locus = linalg.nullspace(rows, g.zero())
    k = Subspace(g, kbasis, locus)
    # h = k intersect ker(phi)
    h_rows = [[dual_pairing(phi, v) for v in kbasis]]
    coeff_kernel, _ = linalg.nullspace(h_rows, g.zero())
    hbasis = []
    for cv in coeff_kernel:
        v = g.zero_vector()
        for c, kb in zip(cv, kbasis):
            v = linalg.vec_add(v, linalg.vec_scale(c, kb))
        hbasis.append(v)
    h = Subspace(g, hbasis, locus)
    non_conical = any(not dual_pairing(phi, v).is_zero() for v in kbasis)
    return OrbitData(g, phi, k, h, omega_Q, non_conical)


def lcs_from_orbit(orbit, D=None):
    """Homogeneous lcs data on the derivation extension of the orbit algebra.

    Builds g(D) with the dual 1-form lam of D, extends phi by phi(D) = 0,
    and assembles omega = -lam ^ phi + d(phi).  The lcs equation and the
    identity omega(Z, .) = phi(Z) lam are verified before returning.
    """
    g = orbit.g_prime
    if not orbit.non_conical:
        raise ConicalOrbit("phi vanishes on its stabilizer")
    if D is None:
        D = [[0] * g.dim for _ in range(g.dim)]
    ext, lam = extend_by_derivation(g, D)
    if orbit.h.span:
        ext.h_subalgebra = [[ext.zero()] + list(v) for v in orbit.h.span]
    phi = KForm(ext, 1, {(i + 1,): c
                         for (i,), c in orbit.phi_prime.coeffs.items()})
    omega = ce_d(phi) - wedge(lam, phi)
    try:
        lcs = lcs_check(ext, omega)
    except StructureError as exc:
        raise DegenerateOnQuotient(
            f"constructed 2-form degenerate on the quotient: {exc}") from exc
    # d(omega) = lam ^ omega and omega(Z, .) = phi(Z) lam, exactly
    if not (ce_d(omega) - wedge(lam, omega)).is_zero():
        raise ConstructionError("lcs equation fails on the extension")
    phiZ = dual_pairing(phi, lcs.Z)
    contraction = KForm(ext, 1, {
        (j,): omega.evaluate(lcs.Z, ext.basis_vector(j))
        for j in range(ext.dim)})
    if not (contraction - lam.scaled(phiZ)).is_zero():
        raise ConstructionError("omega(Z,.) = phi(Z) lam fails")
    if not ext.h_subalgebra and lcs.lam != lam:
        raise ConstructionError("extracted Lee form differs from dual of D")
    return ext, lcs, phi
