"""Lie algebra core: bracket tables, Jacobi witnesses, subspaces, derivations."""

import pytest

from lieform import linalg
from lieform.catalog import abelian, gl2r, sl2r, su2, u2
from lieform.lie_core import (Derivation, LieAlgebra, NotADerivation,
                              ZeroVector, center, centralizer,
                              derived_subalgebra, extend_by_derivation,
                              is_derivation)


def test_bracket_tables_match_structure_constants():
    g = u2()
    # [e1, e2] = -e3, cyclic
    assert g.bracket_basis(1, 2) == g.vector({3: -1})
    assert g.bracket_basis(2, 1) == g.vector({3: 1})
    assert g.bracket_basis(0, 1) == g.zero_vector()
    h = gl2r()
    assert h.bracket_basis(1, 2) == h.vector({2: 2})
    assert h.bracket_basis(1, 3) == h.vector({3: -2})
    assert h.bracket_basis(2, 3) == h.vector({1: 1})


def test_bracket_is_bilinear_and_antisymmetric():
    g = gl2r()
    x = g.vector([1, 2, 3, -1])
    y = g.vector([0, 1, -2, 5])
    xy = g.bracket(x, y)
    yx = g.bracket(y, x)
    assert linalg.vec_is_zero(linalg.vec_add(xy, yx))
    two_x = [c + c for c in x]
    assert g.bracket(two_x, y) == [c + c for c in xy]


def test_jacobi_witness_on_corrupted_table():
    # break antisymmetry by giving both orders the same sign
    bad = LieAlgebra(["e0", "e1", "e2"],
                     {(0, 1): {2: 1}, (1, 0): {2: 1}})
    rep = bad.check_jacobi()
    assert not rep.passed
    assert rep.reason == "antisymmetry fails"
    # break the Jacobi identity itself
    bad2 = LieAlgebra(["e0", "e1", "e2"],
                      {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {0: 1}})
    rep2 = bad2.check_jacobi()
    assert not rep2.passed
    assert rep2.reason == "Jacobi fails"
    assert rep2.witness == (0, 1, 2)


def test_ad_matrix_columns():
    g = su2()
    ad1 = g.ad(g.basis_vector(0))
    for j in range(3):
        col = [ad1[k][j] for k in range(3)]
        assert col == g.bracket(g.basis_vector(0), g.basis_vector(j))


def test_center_and_derived_subalgebra_dims():
    assert center(u2()).dim == 1
    assert center(gl2r()).dim == 1
    assert center(su2()).dim == 0
    assert center(sl2r()).dim == 0
    assert center(abelian(3)).dim == 3
    assert derived_subalgebra(u2()).dim == 3
    assert derived_subalgebra(gl2r()).dim == 3
    assert derived_subalgebra(abelian(4)).dim == 0


def test_centralizer_known():
    g = su2()
    c = centralizer(g, g.basis_vector(0))
    assert c.dim == 1
    assert c.contains(g.basis_vector(0))
    with pytest.raises(ZeroVector):
        centralizer(g, g.zero_vector())


def test_is_derivation_inner_and_non():
    g = sl2r()
    # every ad_x is a derivation
    ok, _ = is_derivation(g, g.ad(g.vector([1, 2, -1])))
    assert ok
    # the identity map is not (for a nonabelian algebra)
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    ok2, witness = is_derivation(g, ident)
    assert not ok2 and witness is not None


def test_extension_by_zero_derivation():
    g = su2()
    ext, lam = extend_by_derivation(g, [[0] * 3 for _ in range(3)])
    assert ext.dim == 4
    assert ext.basis_names[0] == "D"
    # old brackets survive with shifted indices
    assert ext.bracket_basis(1, 2) == ext.vector({3: -1})
    # D is central here
    assert ext.bracket_basis(0, 1) == ext.zero_vector()
    from lieform.exterior import ce_d
    assert ce_d(lam).is_zero()
    assert bool(ext.check_jacobi())


def test_extension_rejects_non_derivation():
    g = sl2r()
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    with pytest.raises(NotADerivation):
        extend_by_derivation(g, ident)


def test_extension_by_inner_derivation_keeps_jacobi():
    g = sl2r()
    D = Derivation(g, g.ad(g.vector([0, 1, 1])))
    ext, _ = extend_by_derivation(g, D)
    assert bool(ext.check_jacobi())
