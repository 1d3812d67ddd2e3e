"""Exterior calculus: wedge, differential, interior product, Lie derivative,
twisted complexes.  Each operation is cross-checked against an independent
pointwise oracle built from evaluation on vectors."""

from fractions import Fraction
from itertools import combinations

import pytest

from lieform import linalg
from lieform.catalog import abelian, gl2r, sl2r, su2, u2
from lieform.exterior import (FormError, KForm, NoSolution, ce_d,
                              dual_pairing, form_monomials, interior,
                              lie_derivative, solve_potential,
                              twisted_cohomology_dim, twisted_d, wedge,
                              wedge_power)
from conftest import make_rng, random_form, random_vector


def e(g, *idx):
    return KForm.monomial(g, idx)


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------

def wedge_oracle(alpha, beta, vectors):
    """(alpha ^ beta)(v_1..v_{k+l}) via the shuffle-sum definition."""
    g = alpha.algebra
    k = alpha.degree
    total = g.zero()
    n = len(vectors)
    for left in combinations(range(n), k):
        right = tuple(i for i in range(n) if i not in left)
        seq = left + right
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if seq[a] > seq[b])
        term = alpha.evaluate(*[vectors[i] for i in left]) * \
            beta.evaluate(*[vectors[i] for i in right])
        total = total + (term if inv % 2 == 0 else -term)
    return total


def d_oracle(alpha, vectors):
    """d(alpha)(X_0..X_k) = sum_{i<j} (-1)^{i+j} alpha([X_i,X_j], rest)."""
    g = alpha.algebra
    total = g.zero()
    n = len(vectors)
    for i in range(n):
        for j in range(i + 1, n):
            rest = [vectors[t] for t in range(n) if t not in (i, j)]
            term = alpha.evaluate(g.bracket(vectors[i], vectors[j]), *rest)
            total = total + (term if (i + j) % 2 == 0 else -term)
    return total


def lie_derivative_oracle(g, v, alpha, vectors):
    """(L_v alpha)(X_1..X_k) = -sum_i alpha(X_1, .., [v, X_i], .., X_k)
    for constant (left-invariant) arguments."""
    total = g.zero()
    for i in range(len(vectors)):
        args = list(vectors)
        args[i] = g.bracket(v, vectors[i])
        total = total - alpha.evaluate(*args)
    return total


# ---------------------------------------------------------------------------
# KForm basics
# ---------------------------------------------------------------------------

def test_kform_rejects_bad_index_tuples():
    g = u2()
    with pytest.raises(FormError):
        KForm(g, 2, {(1, 1): g.one()})
    with pytest.raises(FormError):
        KForm(g, 2, {(2, 1): g.one()})
    with pytest.raises(FormError):
        KForm(g, 2, {(1,): g.one()})


def test_dual_basis_pairing():
    g = u2()
    om = e(g, 1, 3)
    assert om.evaluate(g.basis_vector(1), g.basis_vector(3)) == 1
    assert om.evaluate(g.basis_vector(3), g.basis_vector(1)) == -1
    assert om.evaluate(g.basis_vector(1), g.basis_vector(2)).is_zero()
    assert dual_pairing(e(g, 2), g.vector([1, 2, 3, 4])) == 3


def test_wedge_known_values():
    g = u2()
    assert wedge(e(g, 0), e(g, 1)) == e(g, 0, 1)
    assert wedge(e(g, 1), e(g, 0)) == -e(g, 0, 1)
    assert wedge(e(g, 0), e(g, 0)).is_zero()
    # (e0^e1) ^ (e2^e3) evaluates to 1 on the basis (shuffle normalization)
    om = wedge(e(g, 0, 1), e(g, 2, 3))
    assert om.evaluate(*[g.basis_vector(i) for i in range(4)]) == 1


def test_wedge_graded_commutativity_and_associativity():
    g = gl2r()
    rng = make_rng(11)
    for _ in range(25):
        ka = rng.randint(0, 2)
        kb = rng.randint(0, 2)
        a = random_form(rng, g, ka)
        b = random_form(rng, g, kb)
        c = random_form(rng, g, rng.randint(0, 2))
        sign = (-1) ** (ka * kb)
        assert wedge(a, b) == wedge(b, a).scaled(sign)
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_wedge_matches_shuffle_oracle():
    g = u2()
    rng = make_rng(7)
    for _ in range(20):
        ka = rng.randint(1, 2)
        kb = rng.randint(1, 4 - ka)
        a = random_form(rng, g, ka)
        b = random_form(rng, g, kb)
        vs = [random_vector(rng, g) for _ in range(ka + kb)]
        assert wedge(a, b).evaluate(*vs) == wedge_oracle(a, b, vs)


def test_differential_of_dual_basis_verbatim():
    g = u2()
    # [e1,e2] = -e3 etc., so d(e^1) = e^{23}, d(e^2) = e^{31}, d(e^3) = e^{12}
    assert ce_d(e(g, 0)).is_zero()
    assert ce_d(e(g, 1)) == e(g, 2, 3)
    assert ce_d(e(g, 2)) == -e(g, 1, 3)
    assert ce_d(e(g, 3)) == e(g, 1, 2)
    h = gl2r()
    # [h,e+] = 2e+, [h,e-] = -2e-, [e+,e-] = h
    assert ce_d(e(h, 1)) == -e(h, 2, 3)
    assert ce_d(e(h, 2)) == -e(h, 1, 2).scaled(2)
    assert ce_d(e(h, 3)) == e(h, 1, 3).scaled(2)


def test_differential_matches_pointwise_oracle():
    for g in (u2(), gl2r(), sl2r()):
        rng = make_rng(13)
        for _ in range(15):
            k = rng.randint(1, g.dim - 1)
            a = random_form(rng, g, k)
            vs = [random_vector(rng, g) for _ in range(k + 1)]
            assert ce_d(a).evaluate(*vs) == d_oracle(a, vs)


def test_d_is_an_antiderivation():
    g = gl2r()
    rng = make_rng(3)
    for _ in range(15):
        ka = rng.randint(0, 2)
        a = random_form(rng, g, ka)
        b = random_form(rng, g, rng.randint(0, 2))
        lhs = ce_d(wedge(a, b))
        rhs = wedge(ce_d(a), b) + wedge(a, ce_d(b)).scaled((-1) ** ka)
        assert lhs == rhs


def test_interior_product_oracle_and_square_zero():
    g = u2()
    rng = make_rng(5)
    for _ in range(20):
        k = rng.randint(1, 4)
        a = random_form(rng, g, k)
        v = random_vector(rng, g)
        vs = [random_vector(rng, g) for _ in range(k - 1)]
        assert interior(v, a).evaluate(*vs) == a.evaluate(v, *vs)
        if k >= 2:
            assert interior(v, interior(v, a)).is_zero()


def test_lie_derivative_cartan_vs_bracket_oracle():
    for g in (u2(), sl2r()):
        rng = make_rng(17)
        for _ in range(12):
            k = rng.randint(1, g.dim - 1)
            a = random_form(rng, g, k)
            v = random_vector(rng, g)
            vs = [random_vector(rng, g) for _ in range(k)]
            assert lie_derivative(v, a).evaluate(*vs) == \
                lie_derivative_oracle(g, v, a, vs)


def test_twisted_d_squares_to_zero_for_closed_lambda():
    g = gl2r()
    lam = e(g, 0).scaled(-3)
    assert ce_d(lam).is_zero()
    rng = make_rng(23)
    for _ in range(20):
        a = random_form(rng, g, rng.randint(0, 3))
        assert twisted_d(twisted_d(a, lam), lam).is_zero()


def test_twisted_d_requires_degree_one():
    g = u2()
    with pytest.raises(FormError):
        twisted_d(e(g, 0), e(g, 0, 1))


# ---------------------------------------------------------------------------
# Cohomology and potentials
# ---------------------------------------------------------------------------

def test_untwisted_cohomology_of_u2():
    # product of a line and a compact simple factor: Betti numbers 1,1,0,1,1
    g = u2()
    zero = KForm.zero(g, 1)
    for k, want in [(0, 1), (1, 1), (2, 0), (3, 1), (4, 1)]:
        dim, _ = twisted_cohomology_dim(g, zero, k)
        assert dim == want


def test_untwisted_cohomology_of_abelian():
    # the full exterior algebra survives: dim H^k = C(n, k)
    from math import comb
    g = abelian(3)
    zero = KForm.zero(g, 1)
    for k in range(4):
        dim, _ = twisted_cohomology_dim(g, zero, k)
        assert dim == comb(3, k)


def test_twisted_cohomology_vanishes_for_nonzero_multiple():
    g = u2()
    for c in (1, -1, 2):
        lam = e(g, 0).scaled(c)
        dim, _ = twisted_cohomology_dim(g, lam, 1)
        assert dim == 0


def test_solve_potential_round_trip_and_gauge():
    g = u2()
    lam = e(g, 0).scaled(-1)
    rng = make_rng(29)
    for _ in range(10):
        phi = random_form(rng, g, 1)
        om = twisted_d(phi, lam)
        if om.is_zero():
            continue
        sol = solve_potential(om, lam)
        assert twisted_d(sol, lam) == om
        gauge = g.basis_vector(0)
        sol2 = solve_potential(om, lam, gauge=gauge)
        assert twisted_d(sol2, lam) == om
        assert dual_pairing(sol2, gauge).is_zero()


def test_solve_potential_reports_nonzero_class():
    # on the abelian algebra with lam = 0 a symplectic form is never exact
    g = abelian(4)
    om = wedge(e(g, 0), e(g, 1)) + wedge(e(g, 2), e(g, 3))
    with pytest.raises(NoSolution):
        solve_potential(om, KForm.zero(g, 1))


def test_relative_complex_respects_marked_subalgebra():
    # mark the center of u(2); relative 1-forms must kill e0
    g = u2()
    g.h_subalgebra = [g.basis_vector(0)]
    from lieform.exterior import relative_basis
    basis = relative_basis(g, 1)
    for b in basis:
        assert dual_pairing(b, g.basis_vector(0)).is_zero()
    assert len(basis) == 3
