"""Built-in algebras and structure families, plus the verification suites.

The catalog hard-codes the four-dimensional reductive algebras u(2) and
gl(2,R) together with their parametric complex-structure and lcs families,
and exposes three suites that re-derive the classification statements for
these algebras by exact computation:

* ``u2_classification``   -- the compact case,
* ``gl2_classification``  -- the non-compact case,
* ``reductive_identities`` -- the structural identities behind both.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .exterior import (KForm, ce_d, interior, lie_derivative, solve_potential,
                       twisted_cohomology_dim, wedge)
from .exterior import dual_pairing
from .lie_core import LieAlgebra, center
from .scalars import Scalar
from .structures import (CONVENTION_DEF, CONVENTION_THM, ComplexStructure,
                         StructureReport, assemble_lck, compatibility_check,
                         lcs_check, metric_from, nijenhuis, signature_at,
                         vaisman_check, biinvariant_identities)


class CatalogError(Exception):
    pass


class UnknownId(CatalogError):
    pass


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

def u2(params=()):
    """u(2) = R e0 + su(2) with [e_a, e_b] = -e_c cyclically on (1,2,3)."""
    return LieAlgebra(
        ["e0", "e1", "e2", "e3"],
        {(1, 2): {3: -1}, (2, 3): {1: -1}, (3, 1): {2: -1}},
        params=params, name="u2")


def su2(params=()):
    return LieAlgebra(
        ["e1", "e2", "e3"],
        {(0, 1): {2: -1}, (1, 2): {0: -1}, (2, 0): {1: -1}},
        params=params, name="su2")


def gl2r(params=()):
    """gl(2,R) = R e0 + sl(2,R) with [h,e+-] = +-2e+-, [e+,e-] = h."""
    return LieAlgebra(
        ["e0", "h", "ep", "em"],
        {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}},
        params=params, name="gl2r")


def sl2r(params=()):
    return LieAlgebra(
        ["h", "ep", "em"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        params=params, name="sl2r")


def abelian(n, params=()):
    return LieAlgebra([f"e{i}" for i in range(n)], {}, params=params,
                      name=f"abelian_{n}")


# ---------------------------------------------------------------------------
# Scalars / forms helpers
# ---------------------------------------------------------------------------

def _sc(g, v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, str):
        return Scalar.var(g.params, v)
    return Scalar.const(g.params, Fraction(v))


def oneform(g, coeffs):
    """1-form from a map basis-index -> scalar/parameter-name/rational."""
    return KForm(g, 1, {(i,): _sc(g, c) for i, c in coeffs.items()})


def lcs_form(g, phi):
    """omega = e^0 ^ phi + d(phi) for phi supported away from e^0."""
    return wedge(KForm.basis_oneform(g, 0), phi) + ce_d(phi)


# ---------------------------------------------------------------------------
# Complex structures
# ---------------------------------------------------------------------------

def _from_columns(g, cols):
    n = g.dim
    return ComplexStructure(g, [[cols[j][i] for j in range(n)]
                                for i in range(n)])


def J_ab(g):
    """Calabi-Eckmann family on u(2): J e0 = a e0 + b e1, J e1 = c e0 - a e1,
    J e2 = -e3, J e3 = e2, with c = -(1+a^2)/b."""
    a, b = _sc(g, "a"), _sc(g, "b")
    c = -(1 + a * a) / b
    z, o = g.zero(), g.one()
    return _from_columns(g, [
        [a, b, z, z], [c, -a, z, z], [z, z, z, -o], [z, z, o, z]])


def J_01(g):
    """The exceptional member (a, b) = (0, 1) of the u(2) family."""
    z, o = g.zero(), g.one()
    return _from_columns(g, [
        [z, o, z, z], [-o, z, z, z], [z, z, z, -o], [z, z, o, z]])


def J_mu(g):
    """Two-parameter family on gl(2,R), in the basis (e0, h, e+, e-)."""
    m1, m2 = _sc(g, "mu1"), _sc(g, "mu2")
    z, o = g.zero(), g.one()
    half = Scalar.const(g.params, Fraction(1, 2))
    n2 = m1 * m1 + m2 * m2
    return _from_columns(g, [
        [m2 / m1, z, -n2 / (2 * m1), n2 / (2 * m1)],
        [z, z, o, o],
        [o / m1, -half, -m2 / (2 * m1), m2 / (2 * m1)],
        [-o / m1, -half, m2 / (2 * m1), -m2 / (2 * m1)]])


def J_mu1(g):
    """The exceptional member mu = 1 of the gl(2,R) family."""
    z, o = g.zero(), g.one()
    half = Scalar.const(g.params, Fraction(1, 2))
    return _from_columns(g, [
        [z, z, -half, half],
        [z, z, o, o],
        [o, -half, z, z],
        [-o, -half, z, z]])


# ---------------------------------------------------------------------------
# Bi-invariant scalar products
# ---------------------------------------------------------------------------

def biinvariant_B(g):
    """An ad-invariant nondegenerate symmetric form for a catalog algebra."""
    z, o = g.zero(), g.one()
    two = _sc(g, 2)
    if g.name == "u2":
        return [[o if i == j else z for j in range(4)] for i in range(4)]
    if g.name == "gl2r":
        return [[o, z, z, z], [z, two, z, z], [z, z, z, o], [z, z, o, z]]
    raise CatalogError(f"no stored bi-invariant form for {g.name!r}")


# ---------------------------------------------------------------------------
# Catalog entries
# ---------------------------------------------------------------------------

class CatalogEntry:
    """Immutable bundle: algebra, named families, exclusion polynomials."""

    def __init__(self, id_, algebra, families, bilinears, excluded_locus):
        self.id = id_
        self.algebra = algebra
        self.families = families
        self.bilinears = bilinears
        self.excluded_locus = excluded_locus


def _poly(g, text_vars):
    # small helper: polynomial from scalar arithmetic
    return text_vars.num


def get(id_):
    """Fresh catalog entry for one of u2, gl2r, su2, sl2r, abelian_<n>."""
    if id_ == "u2":
        g = u2(("a", "b", "a1", "a2", "a3"))
        a1, a2, a3 = (_sc(g, n) for n in ("a1", "a2", "a3"))
        phi = oneform(g, {1: "a1", 2: "a2", 3: "a3"})
        families = {
            "J_ab": J_ab(g),
            "J_01": J_01(g),
            "phi_general": phi,
            "omega_general": lcs_form(g, phi),
            "omega_std": lcs_form(g, oneform(g, {1: 1})),
            "lambda_std": oneform(g, {0: -1}),
        }
        excl = [_poly(g, _sc(g, "b")),
                _poly(g, a1 * a1 + a2 * a2 + a3 * a3)]
        entry = CatalogEntry("u2", g, families,
                             {"B": biinvariant_B(g)}, excl)
    elif id_ == "gl2r":
        g = gl2r(("mu1", "mu2", "ah", "ap", "am"))
        ah, ap, am = (_sc(g, n) for n in ("ah", "ap", "am"))
        phi = oneform(g, {1: "ah", 2: "ap", 3: "am"})
        families = {
            "J_mu": J_mu(g),
            "J_mu1": J_mu1(g),
            "phi_general": phi,
            "omega_general": lcs_form(g, phi),
            "omega_std": lcs_form(g, oneform(g, {2: 1, 3: -1})),
            "lambda_std": oneform(g, {0: -1}),
        }
        excl = [_poly(g, _sc(g, "mu1")),
                _poly(g, ah * ah + 4 * ap * am)]
        entry = CatalogEntry("gl2r", g, families,
                             {"B": biinvariant_B(g)}, excl)
    elif id_ == "su2":
        entry = CatalogEntry("su2", su2(), {}, {}, [])
    elif id_ == "sl2r":
        entry = CatalogEntry("sl2r", sl2r(), {}, {}, [])
    elif id_.startswith("abelian_"):
        try:
            n = int(id_.split("_", 1)[1])
        except ValueError:
            raise UnknownId(f"unknown catalog id {id_!r}")
        if n < 1:
            raise UnknownId(f"unknown catalog id {id_!r}")
        entry = CatalogEntry(id_, abelian(n), {}, {}, [])
    else:
        raise UnknownId(f"unknown catalog id {id_!r}")
    if not entry.algebra.check_jacobi():
        raise CatalogError(f"catalog algebra {id_!r} fails the Jacobi check")
    return entry


# ---------------------------------------------------------------------------
# Sample grids
# ---------------------------------------------------------------------------

def lattice(dims, step=Fraction(1, 2), box=3):
    """All rational lattice points of the closed box [-box, box]^dims."""
    axis = []
    v = -Fraction(box)
    while v <= box:
        axis.append(v)
        v += step
    pts = [()]
    for _ in range(dims):
        pts = [p + (x,) for p in pts for x in axis]
    return pts


def _definite(sig):
    return 0 in sig


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

SUITES = ("u2_classification", "gl2_classification", "reductive_identities")


def run_suite(name):
    if name == "u2_classification":
        return _suite_u2()
    if name == "gl2_classification":
        return _suite_gl2()
    if name == "reductive_identities":
        return _suite_reductive()
    raise UnknownId(f"unknown suite {name!r}")


def _forms_equal(f, other_coeffs):
    """Compare a KForm against expected {index tuple: Scalar} coefficients."""
    g = f.algebra
    keys = set(f.coeffs) | set(other_coeffs)
    for k in keys:
        if f.coefficient(k) != other_coeffs.get(k, g.zero()):
            return False
    return True


def _suite_u2():
    rep = StructureReport("u2_classification")

    g0 = u2()
    rep.check("u(2): antisymmetry and Jacobi hold", bool(g0.check_jacobi()))

    gab = u2(("a", "b"))
    Jab = J_ab(gab)
    _, integrable, _ = nijenhuis(gab, Jab)
    rep.check("J_{a,b}: J^2 = -Id and Nijenhuis tensor vanishes over Q(a,b)",
              integrable)

    # the general lcs family omega = e^0 ^ phi + d(phi), phi = sum a_i e^i
    ga = u2(("a1", "a2", "a3"))
    phi = oneform(ga, {1: "a1", 2: "a2", 3: "a3"})
    om = lcs_form(ga, phi)
    lcs = lcs_check(ga, om)
    rep.check("general omega: Lee form is -e^0",
              _forms_equal(lcs.lam, {(0,): -ga.one()}))
    rep.check("general omega: d(omega) != 0 (proper lcs)", lcs.proper)

    # compatibility criterion: J-invariance holds iff a2 = a3 = 0 or the
    # complex structure is the exceptional member (a, b) = (0, 1)
    gf = u2(("a", "b", "a1", "a2", "a3"))
    omf = lcs_form(gf, oneform(gf, {1: "a1", 2: "a2", 3: "a3"}))
    Jfull = J_ab(gf)
    ok_generic, _ = compatibility_check(omf, Jfull)
    rep.check("general (omega, J_{a,b}): not J-invariant identically",
              not ok_generic)
    om_i = lcs_form(gf, oneform(gf, {1: "a1"}))
    ok_i, _ = compatibility_check(om_i, Jfull)
    rep.check("J-invariance holds identically once a2 = a3 = 0", ok_i)
    ok_ii, _ = compatibility_check(
        lcs_form(ga, phi), J_01(ga))
    rep.check("the (0,1) member is J-invariant for every omega", ok_ii)
    # a sample away from both branches stays incompatible
    gpt = u2()
    ok_pt, _ = compatibility_check(
        lcs_form(gpt, oneform(gpt, {1: 1, 2: 1})), J_ab_at(gpt, 1, 2))
    rep.check("sample (a,b)=(1,2), a2=1: not J-invariant", not ok_pt)

    # case (i): the standard structure omega = e^{01} + e^{23}
    om_std = lcs_form(gab, oneform(gab, {1: 1}))
    lck = assemble_lck(gab, om_std, Jab, CONVENTION_THM)
    a, b = _sc(gab, "a"), _sc(gab, "b")
    c = -(1 + a * a) / b
    half = Scalar.const(gab.params, Fraction(1, 2))
    rep.check("case (i): Lee form -e^0",
              _forms_equal(lck.lcs.lam, {(0,): -gab.one()}))
    rep.check("case (i): Reeb vector e1/2",
              lck.lcs.Z == [gab.zero(), half, gab.zero(), gab.zero()])
    rep.check("case (i): Lee vector (a e1 - c e0)/2",
              lck.xi == [-c * half, a * half, gab.zero(), gab.zero()])
    ok_v, _, _ = vaisman_check(lck)
    rep.check("case (i): Vaisman identically over Q(a,b)", ok_v)
    expect_thm = {
        (0, 0): -b, (0, 1): a, (1, 0): a, (1, 1): c,
        (2, 2): gab.one(), (3, 3): gab.one(),
    }
    ok_m = all(lck.metric.matrix[i][j] ==
               expect_thm.get((i, j), gab.zero()) for i in range(4)
               for j in range(4))
    rep.check("case (i): metric -b(e^0)^2+2a e^0e^1+c(e^1)^2+(e^2)^2+(e^3)^2",
              ok_m)

    good = total = 0
    for av, bv in lattice(2):
        if bv == 0:
            continue
        total += 1
        sig = signature_at(lck.metric, {"a": av, "b": bv})
        if _definite(sig) == (bv < 0):
            good += 1
    rep.check(f"case (i): metric definite iff b < 0 on {total} samples",
              good == total and total >= 50)

    # case (ii): the exceptional member with a general omega
    J0 = J_01(ga)
    lck2 = assemble_lck(ga, om, J0, CONVENTION_THM)
    a1, a2, a3 = (_sc(ga, n) for n in ("a1", "a2", "a3"))
    expect2 = {
        (0, 0): -a1, (1, 1): -a1, (2, 2): a1, (3, 3): a1,
        (0, 2): a3, (2, 0): a3, (0, 3): -a2, (3, 0): -a2,
        (1, 2): -a2, (2, 1): -a2, (1, 3): -a3, (3, 1): -a3,
    }
    ok_m2 = all(lck2.metric.matrix[i][j] ==
                expect2.get((i, j), ga.zero()) for i in range(4)
                for j in range(4))
    rep.check("case (ii): metric matrix matches the displayed expansion",
              ok_m2)
    sig_ok = total = 0
    for pt in lattice(3, step=Fraction(1)):
        if pt == (0, 0, 0):
            continue
        total += 1
        asn = {"a1": pt[0], "a2": pt[1], "a3": pt[2]}
        if signature_at(lck2.metric, asn) == (2, 2):
            sig_ok += 1
    rep.check(f"case (ii): signature (2,2) at all {total} nonzero samples",
              sig_ok == total and total >= 50)

    # case (ii) Vaisman criterion via the Lee-vector ansatz: the Lee vector
    # must lie in span{e0, vec a}; applying omega o J to that span forces
    # the vec-a component to vanish and then a2 = a3 = 0.
    veca = [ga.zero(), a1, a2, a3]
    beta0 = interior(J0.apply(ga.basis_vector(0)), om)
    betaA = interior(J0.apply(veca), om)
    norm = a1 * a1 + a2 * a2 + a3 * a3
    rep.check("ansatz: (omega o J)(vec a) = -|a|^2 e^1 (vec-a component dies)",
              _forms_equal(betaA, {(1,): -norm}))
    rep.check("ansatz: (omega o J)(e0) = -a1 e^0 - a2 e^3 + a3 e^2",
              _forms_equal(beta0, {(0,): -a1, (2,): a3, (3,): -a2}))
    rep.info("ansatz: proportionality to e^0 forces a2 = a3 = 0",
             "vanishing locus {a2, a3}")

    # Vaisman verdicts: the standard structure is Vaisman, perturbed ones not
    g1 = u2(("a1",))
    lck_std = assemble_lck(
        g1, lcs_form(g1, oneform(g1, {1: "a1"})), J_01(g1), CONVENTION_THM)
    ok_vs, _, _ = vaisman_check(lck_std)
    rep.check("case (ii): omega = a1(e^{01}+e^{23}) is Vaisman over Q(a1)",
              ok_vs)
    bad = []
    for pt in [(0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 2, 3), (2, 0, -1)]:
        gs = u2()
        oms = lcs_form(gs, oneform(gs, dict(zip((1, 2, 3), pt))))
        lcks = assemble_lck(gs, oms, J_01(gs), CONVENTION_THM)
        ok_s, _, _ = vaisman_check(lcks)
        if ok_s:
            bad.append(pt)
    rep.check("case (ii): samples with (a2,a3) != 0 are never Vaisman",
              not bad, detail=str(bad) if bad else "")

    # twisted cohomology: H^1 vanishes and [omega] = 0 for lambda = -e^0
    lam0 = KForm(g0, 1, {(0,): -g0.one()})
    h1, _ = twisted_cohomology_dim(g0, lam0, 1)
    rep.check("H^1 twisted by -e^0 vanishes", h1 == 0)
    lam_a = KForm(ga, 1, {(0,): -ga.one()})
    pot = solve_potential(om, lam_a)
    rep.check("[omega] = 0: the twisted potential exists for general omega",
              (ce_d(pot) - wedge(lam_a, pot) - om).is_zero())
    return rep


def J_ab_at(g, a, b):
    """Parameter-free member of the u(2) family at a rational point (a, b)."""
    a = Fraction(a)
    b = Fraction(b)
    c = -(1 + a * a) / b
    z, o = g.zero(), g.one()
    asc = _sc(g, a)
    return _from_columns(g, [
        [asc, _sc(g, b), z, z], [_sc(g, c), -asc, z, z],
        [z, z, z, -o], [z, z, o, z]])


def _suite_gl2():
    rep = StructureReport("gl2_classification")

    g0 = gl2r()
    rep.check("gl(2,R): antisymmetry and Jacobi hold", bool(g0.check_jacobi()))

    gmu = gl2r(("mu1", "mu2"))
    Jm = J_mu(gmu)
    _, integrable, _ = nijenhuis(gmu, Jm)
    rep.check("J_mu: J^2 = -Id and Nijenhuis tensor vanishes over Q(mu1,mu2)",
              integrable)

    # the general lcs family
    ga = gl2r(("ah", "ap", "am"))
    phi = oneform(ga, {1: "ah", 2: "ap", 3: "am"})
    om = lcs_form(ga, phi)
    ah, ap, am = (_sc(ga, n) for n in ("ah", "ap", "am"))
    om2 = wedge(om, om)
    rep.check("omega^2 = -2(ah^2 + 4 ap am) e^0^h^*^e^+^e^-",
              _forms_equal(om2, {(0, 1, 2, 3): -2 * (ah * ah + 4 * ap * am)}))
    lcs = lcs_check(ga, om)
    rep.check("general omega: Lee form is -e^0",
              _forms_equal(lcs.lam, {(0,): -ga.one()}))
    rep.check("general omega: d(omega) != 0 (proper lcs)", lcs.proper)

    # case (i): mu != 1, the unique compatible structure
    om_std = lcs_form(gmu, oneform(gmu, {2: 1, 3: -1}))
    lck_i = assemble_lck(gmu, om_std, Jm, CONVENTION_DEF)
    ok_vi, _, _ = vaisman_check(lck_i)
    rep.check("case (i): omega = e^0^(e^+-e^-) - 2h^*^(e^++e^-) is Vaisman "
              "over Q(mu1,mu2)", ok_vi)
    sig_ok = total = 0
    for m1v, m2v in lattice(2):
        if m1v == 0:
            continue
        total += 1
        sig = signature_at(lck_i.metric, {"mu1": m1v, "mu2": m2v})
        if _definite(sig) == (m1v > 0):
            sig_ok += 1
    rep.check(f"case (i): metric definite iff mu1 > 0 on {total} samples",
              sig_ok == total and total >= 50)
    # uniqueness: generic omega is not J_mu-invariant, the ah = 0, am = -ap
    # branch is
    gu = gl2r(("mu1", "mu2", "ah", "ap", "am"))
    ok_gen, _ = compatibility_check(
        lcs_form(gu, oneform(gu, {1: "ah", 2: "ap", 3: "am"})), J_mu(gu))
    rep.check("general (omega, J_mu): not J-invariant identically", not ok_gen)
    gq = gl2r(("mu1", "mu2", "ap"))
    apq = _sc(gq, "ap")
    ok_br, _ = compatibility_check(
        lcs_form(gq, KForm(gq, 1, {(2,): apq, (3,): -apq})), J_mu(gq))
    rep.check("J-invariance holds identically once ah = 0, am = -ap", ok_br)

    # case (ii): mu = 1 is compatible with every omega
    J1 = J_mu1(ga)
    ok_all, _ = compatibility_check(om, J1)
    rep.check("the mu = 1 member is J-invariant for every omega", ok_all)
    lck = assemble_lck(ga, om, J1, CONVENTION_DEF)
    halfa = Scalar.const(ga.params, Fraction(1, 2))
    expect = {
        (0, 0): -halfa * (ap - am), (1, 1): -2 * (ap - am),
        (0, 1): ap + am, (1, 0): ap + am,
        (2, 2): -2 * ap, (3, 3): 2 * am,
        (0, 2): -halfa * ah, (2, 0): -halfa * ah,
        (0, 3): -halfa * ah, (3, 0): -halfa * ah,
        (1, 2): -ah, (2, 1): -ah, (1, 3): ah, (3, 1): ah,
    }
    ok_m = all(lck.metric.matrix[i][j] == expect.get((i, j), ga.zero())
               for i in range(4) for j in range(4))
    rep.check("case (ii): metric matches the displayed coefficient matrix",
              ok_m)

    # Vaisman criterion: ah = 0 and ap = -am != 0
    gv = gl2r(("ap",))
    apv = _sc(gv, "ap")
    om_v = lcs_form(gv, KForm(gv, 1, {(2,): apv, (3,): -apv}))
    lck_v = assemble_lck(gv, om_v, J_mu1(gv), CONVENTION_DEF)
    ok_v, _, _ = vaisman_check(lck_v)
    rep.check("Vaisman identically on the branch ah = 0, am = -ap over Q(ap)",
              ok_v)
    expect_v = {(0, 0): -apv, (1, 1): -4 * apv, (2, 2): -2 * apv,
                (3, 3): -2 * apv}
    ok_mv = all(lck_v.metric.matrix[i][j] == expect_v.get((i, j), gv.zero())
                for i in range(4) for j in range(4))
    rep.check("on that branch the metric is -ap diag(1, 4, 2, 2) (definite)",
              ok_mv)
    verdicts = []
    for pt, want in [((0, 1, -1), True), ((0, 2, -2), True),
                     ((0, -1, 2), False), ((1, 1, -1), False),
                     ((1, 2, 3), False), ((2, 1, 1), False)]:
        gs = gl2r()
        oms = lcs_form(gs, oneform(gs, dict(zip((1, 2, 3), pt))))
        lcks = assemble_lck(gs, oms, J_mu1(gs), CONVENTION_DEF)
        ok_s, _, _ = vaisman_check(lcks)
        verdicts.append(ok_s == want)
    rep.check("Vaisman samples agree with the criterion ah = 0, ap = -am != 0",
              all(verdicts))

    # definiteness region: -ah^2 > 4 ap am and am > 0 > ap
    pos = total = 0
    for pt in lattice(3, step=Fraction(1)):
        ahv, apv_, amv = pt
        if ahv * ahv + 4 * apv_ * amv == 0:
            continue
        total += 1
        sig = signature_at(lck.metric,
                           {"ah": ahv, "ap": apv_, "am": amv})
        inside = (-ahv * ahv > 4 * apv_ * amv) and (amv > 0 > apv_)
        if (sig == (4, 0)) == inside:
            pos += 1
    rep.check(f"positive definite exactly on the stated region "
              f"({total} samples)", pos == total and total >= 100)

    # twisted cohomology
    lam0 = KForm(g0, 1, {(0,): -g0.one()})
    h1, _ = twisted_cohomology_dim(g0, lam0, 1)
    rep.check("H^1 twisted by -e^0 vanishes", h1 == 0)
    lam_a = KForm(ga, 1, {(0,): -ga.one()})
    pot = solve_potential(om, lam_a)
    rep.check("[omega] = 0: the twisted potential exists for general omega",
              (ce_d(pot) - wedge(lam_a, pot) - om).is_zero())
    return rep


def _vaisman_instances():
    """The catalog Vaisman representatives used by the identity suite."""
    gab = u2(("a", "b"))
    yield ("u2, omega = e^{01}+e^{23}, J_{a,b}", gab,
           lcs_form(gab, oneform(gab, {1: 1})), J_ab(gab))
    gg = gl2r()
    yield ("gl2r, omega = e^0^(e^+-e^-) - 2h^*^(e^++e^-), mu = 1", gg,
           lcs_form(gg, oneform(gg, {2: 1, 3: -1})), J_mu1(gg))


def _suite_reductive():
    rep = StructureReport("reductive_identities")

    for label, g, om, J in _vaisman_instances():
        lck = assemble_lck(g, om, J, CONVENTION_DEF)
        lam, Z, xi = lck.lcs.lam, lck.lcs.Z, lck.xi
        phi, theta = lck.phi, lck.theta
        dphi = ce_d(phi)
        rep.check(f"{label}: Z in ker d(phi)", interior(Z, dphi).is_zero())
        rep.check(f"{label}: xi in ker d(phi)", interior(xi, dphi).is_zero())
        lam_xi = dual_pairing(lam, xi)
        factor = -lam_xi.inverse()
        rep.check(f"{label}: phi = (-1/lam(xi)) theta",
                  phi == theta.scaled(factor))
        rep.info(f"{label}: proportionality factor phi/theta",
                 str(factor))
        contraction = KForm(g, 1, {
            (j,): om.evaluate(Z, g.basis_vector(j)) for j in range(g.dim)})
        phiZ = dual_pairing(phi, Z)
        rep.check(f"{label}: omega(Z,.) = phi(Z) lam",
                  contraction == lam.scaled(phiZ))
        lhs = lie_derivative(xi, om)
        rhs = om.scaled(lam_xi) - wedge(lam, theta) + ce_d(theta)
        rep.check(f"{label}: L_xi omega = lam(xi) omega - lam^theta + d(theta)",
                  lhs == rhs)
        sub, data = biinvariant_identities(g, biinvariant_B(g), lck)
        sub.title = label
        rep.extend(sub)
        rep.check(f"{label}: dim Z_g(v) <= 2", data["dim_Zg_v"] <= 2)

    for gz in (u2(), gl2r(), su2(), sl2r()):
        rep.check(f"{gz.name}: dim of the center <= 2", center(gz).dim <= 2)
    for gz in (su2(), sl2r()):
        rep.check(f"{gz.name} (the derived part): dim of the center <= 1",
                  center(gz).dim <= 1)
    for gz in (u2(), gl2r()):
        lam0 = KForm(gz, 1, {(0,): -gz.one()})
        h1, _ = twisted_cohomology_dim(gz, lam0, 1)
        rep.check(f"{gz.name}: H^1 twisted by -e^0 vanishes", h1 == 0)
    return rep
