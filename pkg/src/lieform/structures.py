"""Geometric-structure checkers: complex structures, lcs/lcK data, metrics,
the Koszul connection, the Vaisman test and bi-invariant-form identities.

All verdicts are exact.  Parametric inputs get symbolic verdicts; when an
identity fails to hold identically the nonzero numerator polynomials are
reported as the vanishing locus on which it would hold.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .exterior import (KForm, ce_d, dual_pairing, interior, lie_derivative,
                       solve_potential, twisted_d, wedge, wedge_power)
from .lie_core import Subspace, centralizer, derived_subalgebra
from .scalars import CScalar, Scalar, scalar_eval


class StructureError(Exception):
    pass


class NotAlmostComplex(StructureError):
    pass


class Degenerate(StructureError):
    def __init__(self, msg, locus=None):
        self.locus = list(locus or [])
        super().__init__(msg)


class NoLeeForm(StructureError):
    pass


class LeeFormNotClosed(StructureError):
    pass


class NotCompatible(StructureError):
    pass


class NotTransverse(StructureError):
    pass


class DegenerateMetric(Degenerate):
    pass


class DegenerateAtPoint(StructureError):
    pass


class NotAdInvariant(StructureError):
    pass


class DegenerateB(StructureError):
    pass


class IsotropicLeeVector(StructureError):
    pass


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"
INFO = "INFO"


class StructureReport:
    """Ordered list of (check name, verdict, detail) with merge support."""

    def __init__(self, title=""):
        self.title = title
        self.entries = []

    def add(self, name, verdict, detail=""):
        self.entries.append((name, verdict, str(detail)))

    def check(self, name, condition, detail=""):
        self.add(name, PASS if condition else FAIL, detail)
        return bool(condition)

    def info(self, name, detail=""):
        self.add(name, INFO, detail)

    def skip(self, name, detail=""):
        self.add(name, SKIPPED, detail)

    def extend(self, other):
        for name, verdict, detail in other.entries:
            prefix = f"{other.title}: " if other.title else ""
            self.entries.append((prefix + name, verdict, detail))

    @property
    def ok(self):
        return all(v != FAIL for _, v, _ in self.entries)

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIPPED: 0, INFO: 0}
        for _, v, _ in self.entries:
            out[v] += 1
        return out

    def to_text(self):
        lines = []
        if self.title:
            lines.append(f"== {self.title} ==")
        for name, verdict, detail in self.entries:
            line = f"[{verdict}] {name}"
            if detail:
                line += f" :: {detail}"
            lines.append(line)
        c = self.counts()
        lines.append(
            f"-- {c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
        return "\n".join(lines)

    def to_json(self):
        return {
            "title": self.title,
            "checks": [
                {"name": n, "verdict": v, "detail": d}
                for n, v, d in self.entries],
            "ok": self.ok,
        }


# ---------------------------------------------------------------------------
# Complex structures and the Nijenhuis tensor
# ---------------------------------------------------------------------------

class ComplexStructure:
    """An endomorphism J with J^2 = -Id over the scalar field."""

    def __init__(self, algebra, matrix):
        self.algebra = algebra
        self.matrix = [[algebra._scalar(c) for c in row] for row in matrix]
        n = algebra.dim
        for i in range(n):
            for j in range(n):
                acc = algebra.zero()
                for k in range(n):
                    acc = acc + self.matrix[i][k] * self.matrix[k][j]
                want = -algebra.one() if i == j else algebra.zero()
                if acc != want:
                    raise NotAlmostComplex(
                        f"J^2 != -Id at entry ({i},{j}): {acc}")

    def apply(self, v):
        return linalg.mat_vec(self.matrix, v)

    def pullback(self, alpha):
        """J* on 1-forms: (J*a)(x) = a(Jx)."""
        g = self.algebra
        coeffs = {}
        for (k,), c in alpha.coeffs.items():
            for i in range(g.dim):
                e = self.matrix[k][i]
                if not e.is_zero():
                    key = (i,)
                    coeffs[key] = coeffs.get(key, g.zero()) + c * e
        return KForm(g, 1, coeffs)


def nijenhuis(g, J):
    """Nijenhuis tensor on basis pairs and the integrability verdict.

    Returns (table, integrable, vanishing) where vanishing lists the
    numerator polynomials that must vanish for integrability.
    """
    if not isinstance(J, ComplexStructure):
        J = ComplexStructure(g, J)
    table = {}
    vanishing = []
    integrable = True
    for i in range(g.dim):
        x = g.basis_vector(i)
        jx = J.apply(x)
        for j in range(i + 1, g.dim):
            y = g.basis_vector(j)
            jy = J.apply(y)
            n = g.bracket(jx, jy)
            n = linalg.vec_sub(n, J.apply(g.bracket(jx, y)))
            n = linalg.vec_sub(n, J.apply(g.bracket(x, jy)))
            n = linalg.vec_sub(n, g.bracket(x, y))
            table[(i, j)] = n
            for c in n:
                if not c.is_zero():
                    integrable = False
                    linalg.merge_locus(vanishing, [c.num])
    return table, integrable, vanishing


# -- correspondence between J and its i-eigenspace --------------------------

def _cbracket(g, x, y):
    """Bracket extended to CScalar vectors."""
    out = [CScalar(g.zero()) for _ in range(g.dim)]
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y):
            if yj.is_zero():
                continue
            b = g.bracket_basis(i, j)
            for k in range(g.dim):
                if not b[k].is_zero():
                    out[k] = out[k] + xi * yj * CScalar(b[k])
    return out


def subalgebra_to_J(g, span):
    """Complex structure with Eig(J, i) = span, for span of two vectors.

    Returns (ComplexStructure, is_subalgebra): the flag records whether the
    span is closed under the bracket (equivalently J is integrable).
    """
    n = g.dim
    czero = CScalar(g.zero())
    cone = CScalar(g.one())
    ci = CScalar(g.zero(), g.one())
    ell = [[c if isinstance(c, CScalar) else CScalar(g._scalar(c))
            for c in v] for v in span]
    rho = [[c.conj() for c in v] for v in ell]
    cols = ell + rho
    # transversality: the columns must span g^C
    mat = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
    r, _ = linalg.rank(mat)
    if r < n or len(cols) != n:
        raise NotTransverse("span and its conjugate do not decompose g^C")
    is_subalg = True
    for a in range(len(ell)):
        for b in range(a + 1, len(ell)):
            br = _cbracket(g, ell[a], ell[b])
            if not linalg.in_span(ell, br, czero):
                is_subalg = False
    jmat = [[None] * n for _ in range(n)]
    for k in range(n):
        ek = [cone if t == k else czero for t in range(n)]
        x, _, _ = linalg.solve(mat, ek, czero)
        if x is None:
            raise NotTransverse("decomposition of basis vector failed")
        u = [czero] * n
        for a in range(len(ell)):
            u = linalg.vec_add(u, linalg.vec_scale(x[a], ell[a]))
        # J e_k = i u - i (e_k - u) = 2 i u - i e_k
        jek = [ci * (u[t] + u[t]) - ci * ek[t] for t in range(n)]
        for t in range(n):
            if not jek[t].im.is_zero():
                raise NotTransverse("resulting endomorphism is not real")
            jmat[t][k] = jek[t].re
    return ComplexStructure(g, jmat), is_subalg


def J_to_subalgebra(J):
    """Basis of ker(J - i Id) in the complexification."""
    g = J.algebra
    czero = CScalar(g.zero())
    ci = CScalar(g.zero(), g.one())
    n = g.dim
    rows = [[CScalar(J.matrix[i][j]) - (ci if i == j else czero)
             for j in range(n)] for i in range(n)]
    basis, _ = linalg.nullspace(rows, czero)
    return basis


# ---------------------------------------------------------------------------
# lcs verification
# ---------------------------------------------------------------------------

class LcsData:
    def __init__(self, algebra, omega, lam, Z, proper, locus):
        self.algebra = algebra
        self.omega = omega
        self.lam = lam
        self.Z = Z
        self.proper = proper
        self.locus = list(locus)


def gram_matrix(omega):
    """Matrix M[i][j] = omega(e_i, e_j)."""
    g = omega.algebra
    n = g.dim
    M = [[g.zero()] * n for _ in range(n)]
    for (i, j), c in omega.coeffs.items():
        M[i][j] = c
        M[j][i] = -c
    return M


def lcs_check(g, omega):
    """Verify the lcs equation and extract the Lee form and Reeb vector.

    Checks nondegeneracy of omega on g/h, solves lam ^ omega = d(omega) for
    the Lee form, checks d(lam) = 0 separately (automatic only above
    dimension 4), and solves omega(Z, .) = lam/2 for the Reeb vector.
    """
    n = g.dim
    h_dim = 0
    if g.h_subalgebra:
        h_dim = Subspace(g, g.h_subalgebra).dim
    M = gram_matrix(omega)
    r, locus = linalg.rank(M)
    if r < n - h_dim:
        raise Degenerate(
            f"rank {r} on the quotient (need {n - h_dim})", locus)
    dom = ce_d(omega)
    # solve lam ^ omega = d(omega), lam = sum x_i e^i
    from .exterior import form_monomials, form_to_vector
    target = form_monomials(g, 3)
    columns = [form_to_vector(wedge(KForm.basis_oneform(g, i), omega), target)
               for i in range(n)]
    rows = [[columns[i][t] for i in range(n)] for t in range(len(target))]
    rhs = form_to_vector(dom, target)
    x, _, locus2 = linalg.solve(rows, rhs, g.zero())
    if x is None:
        raise NoLeeForm("d(omega) is not of the form lam ^ omega")
    linalg.merge_locus(locus, locus2)
    lam = KForm(g, 1, {(i,): c for i, c in enumerate(x)})
    if not ce_d(lam).is_zero():
        raise LeeFormNotClosed(f"d(lam) = {ce_d(lam)} != 0")
    # omega(Z, e_j) = lam(e_j)/2
    half = Fraction(1, 2)
    rhs_z = [lam.coefficient((j,)) * half for j in range(n)]
    rows_z = [[M[i][j] for i in range(n)] for j in range(n)]
    z, _, locus3 = linalg.solve(rows_z, rhs_z, g.zero())
    if z is None:
        raise Degenerate("no Reeb vector: omega(Z,.) = lam/2 unsolvable",
                         locus)
    linalg.merge_locus(locus, locus3)
    if not dual_pairing(lam, z).is_zero():
        raise StructureError("lam(Z) != 0; omega is not skew")
    return LcsData(g, omega, lam, z, proper=not dom.is_zero(), locus=locus)


# ---------------------------------------------------------------------------
# Compatibility, metrics, signatures
# ---------------------------------------------------------------------------

def compatibility_check(lcs, J):
    """omega(JX, JY) = omega(X, Y) on basis pairs.

    Accepts either LcsData or a raw 2-form for lcs.  Returns
    (compatible, defects) where defects maps basis pairs to the nonzero
    defect scalars (empty iff compatible identically).
    """
    omega = lcs.omega if isinstance(lcs, LcsData) else lcs
    g = omega.algebra
    defects = {}
    for i in range(g.dim):
        ji = J.apply(g.basis_vector(i))
        for j in range(i + 1, g.dim):
            jj = J.apply(g.basis_vector(j))
            d = omega.evaluate(ji, jj) - omega.evaluate(
                g.basis_vector(i), g.basis_vector(j))
            if not d.is_zero():
                defects[(i, j)] = d
    return (not defects), defects


class Metric:
    """Symmetric Scalar matrix with its producing sign convention."""

    def __init__(self, algebra, matrix, convention_tag, locus=None):
        self.algebra = algebra
        self.matrix = matrix
        self.convention_tag = convention_tag
        self.locus = list(locus or [])

    def pair(self, x, y):
        total = self.algebra.zero()
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if not yj.is_zero():
                    total = total + xi * self.matrix[i][j] * yj
        return total


CONVENTION_DEF = "def"   # g = omega(., J.)
CONVENTION_THM = "thm"   # g = -omega(., J.)


def metric_from(lcs, J, convention=CONVENTION_THM):
    """Metric in either sign convention; the two differ by an overall sign."""
    omega = lcs.omega if isinstance(lcs, LcsData) else lcs
    g = omega.algebra
    n = g.dim
    mat = [[omega.evaluate(g.basis_vector(i), J.apply(g.basis_vector(j)))
            for j in range(n)] for i in range(n)]
    if convention == CONVENTION_THM:
        mat = [[-c for c in row] for row in mat]
    elif convention != CONVENTION_DEF:
        raise StructureError(f"unknown metric convention {convention!r}")
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise NotCompatible(
                    f"metric not symmetric at ({i},{j}); "
                    "omega is not J-invariant")
    d = linalg.det(mat)
    locus = [d.num] if (not d.is_zero() and not d.num.is_constant()) else []
    if d.is_zero():
        locus = []
    return Metric(g, mat, convention, locus)


def exact_signature(rows):
    """Signature (p, q) of a symmetric matrix of Fractions, exactly.

    Symmetric Gaussian pivoting; a zero diagonal with a nonzero off-diagonal
    entry contributes a hyperbolic (1,1) pair.
    """
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    p = q = 0
    live = list(range(n))
    while live:
        piv = None
        for i in live:
            if a[i][i] != 0:
                piv = i
                break
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                p += 1
            else:
                q += 1
            live.remove(piv)
            prow = {j: a[piv][j] for j in live}
            for i in live:
                f = a[i][piv] / d
                if f != 0:
                    for j in live:
                        a[i][j] -= f * prow[j]
                a[i][piv] = Fraction(0)
                a[piv][i] = Fraction(0)
            continue
        hyper = None
        for ii, i in enumerate(live):
            for j in live[ii + 1:]:
                if a[i][j] != 0:
                    hyper = (i, j)
                    break
            if hyper:
                break
        if hyper is None:
            raise DegenerateAtPoint("matrix is degenerate at the point")
        # congruence e_i -> e_i + e_j creates a nonzero diagonal entry
        i, j = hyper
        for c in range(n):
            a[i][c] += a[j][c]
        for r_ in range(n):
            a[r_][i] += a[r_][j]
    return p, q


def signature_at(gm, assignment):
    """Exact signature of the metric at a rational parameter point."""
    n = len(gm.matrix)
    try:
        rows = [[scalar_eval(gm.matrix[i][j], assignment) for j in range(n)]
                for i in range(n)]
    except Exception as exc:
        raise DegenerateAtPoint(f"cannot evaluate metric: {exc}") from exc
    return exact_signature(rows)


# ---------------------------------------------------------------------------
# Levi-Civita connection and the Vaisman test
# ---------------------------------------------------------------------------

def levi_civita(g, gm):
    """Connection table via the Koszul formula for left-invariant metrics:
    2 g(nabla_X Y, W) = g([X,Y],W) - g([Y,W],X) + g([W,X],Y).

    Returns (table, locus) with table[(i,j)] = nabla_{e_i} e_j.
    """
    n = g.dim
    try:
        ginv, locus = linalg.inverse(gm.matrix, g.zero())
    except linalg.LinalgError as exc:
        raise DegenerateMetric("metric is singular", gm.locus) from exc
    half = Fraction(1, 2)
    table = {}
    for i in range(n):
        ei = g.basis_vector(i)
        for j in range(n):
            ej = g.basis_vector(j)
            rhs = []
            for k in range(n):
                ek = g.basis_vector(k)
                val = gm.pair(g.bracket(ei, ej), ek) \
                    - gm.pair(g.bracket(ej, ek), ei) \
                    + gm.pair(g.bracket(ek, ei), ej)
                rhs.append(val * half)
            table[(i, j)] = linalg.mat_vec(ginv, rhs)
    return table, locus


def nabla_of_vector(g, table, xi):
    """List of nabla_{e_i} xi for a constant (left-invariant) vector xi."""
    out = []
    for i in range(g.dim):
        v = g.zero_vector()
        for j, c in enumerate(xi):
            if not c.is_zero():
                v = linalg.vec_add(v, linalg.vec_scale(c, table[(i, j)]))
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# Full lcK assembly
# ---------------------------------------------------------------------------

class LckData:
    def __init__(self, lcs, J, metric, xi, theta, phi, locus):
        self.lcs = lcs
        self.J = J
        self.metric = metric
        self.xi = xi
        self.theta = theta
        self.phi = phi
        self.locus = list(locus)

    @property
    def algebra(self):
        return self.lcs.algebra


def assemble_lck(g, omega, J, convention=CONVENTION_THM):
    """Assemble the full lcK data set.

    The Lee vector is computed from the defining convention g = omega(., J.)
    (which makes Z = J xi an identity); the returned Metric carries the
    requested convention tag.
    """
    lcs = lcs_check(g, omega)
    ok, defects = compatibility_check(lcs, J)
    if not ok:
        pair = next(iter(defects))
        raise NotCompatible(
            f"omega is not J-invariant; defect {defects[pair]} at {pair}")
    metric = metric_from(lcs, J, convention)
    gdef = metric if convention == CONVENTION_DEF else \
        metric_from(lcs, J, CONVENTION_DEF)
    # xi = -1/2 g^{-1} lam in the defining convention
    n = g.dim
    half = Fraction(1, 2)
    rhs = [-(lcs.lam.coefficient((j,)) * half) for j in range(n)]
    xi, _, locus = linalg.solve(gdef.matrix, rhs, g.zero())
    if xi is None:
        raise DegenerateMetric("metric does not determine the Lee vector",
                               gdef.locus)
    linalg.merge_locus(locus, lcs.locus)
    theta = J.pullback(lcs.lam).scaled(half)
    jxi = J.apply(xi)
    if any(a != b for a, b in zip(jxi, lcs.Z)):
        raise StructureError("Z = J xi fails; inconsistent conventions")
    phi = solve_potential(omega, lcs.lam, gauge=xi)
    return LckData(lcs, J, metric, xi, theta, phi, locus)


def vaisman_check(lck):
    """Parallel-Lee-field test: nabla xi = 0 identically.

    Returns (is_vaisman, vanishing, report) where vanishing lists numerator
    polynomials whose common zero locus is where the structure is Vaisman,
    and report carries g(xi,xi) and lam(xi).
    """
    g = lck.algebra
    table, locus = levi_civita(g, lck.metric)
    nxi = nabla_of_vector(g, table, lck.xi)
    vanishing = []
    ok = True
    for v in nxi:
        for c in v:
            if not c.is_zero():
                ok = False
                linalg.merge_locus(vanishing, [c.num])
    report = {
        "g(xi,xi)": lck.metric.pair(lck.xi, lck.xi),
        "lam(xi)": dual_pairing(lck.lcs.lam, lck.xi),
        "locus": locus,
    }
    return ok, vanishing, report


# ---------------------------------------------------------------------------
# Bi-invariant form identities
# ---------------------------------------------------------------------------

def biinvariant_identities(g, B, lck):
    """Identities relating d(phi) to ad_v for phi = B(v, .).

    B must be symmetric, nondegenerate and ad-invariant.  Returns a
    StructureReport plus computed data (v, ranks, centralizer dims).
    """
    n = g.dim
    B = [[g._scalar(c) for c in row] for row in B]
    for i in range(n):
        for j in range(i + 1, n):
            if B[i][j] != B[j][i]:
                raise NotAdInvariant(f"B not symmetric at ({i},{j})")

    def bpair(x, y):
        total = g.zero()
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if not yj.is_zero():
                    total = total + xi * B[i][j] * yj
        return total

    for i in range(n):
        ei = g.basis_vector(i)
        for j in range(n):
            ej = g.basis_vector(j)
            for k in range(n):
                ek = g.basis_vector(k)
                val = bpair(g.bracket(ei, ej), ek) \
                    + bpair(ej, g.bracket(ei, ek))
                if not val.is_zero():
                    raise NotAdInvariant(
                        f"ad-invariance fails on triple ({i},{j},{k})")
    if linalg.det(B).is_zero():
        raise DegenerateB("B is degenerate")

    report = StructureReport("bi-invariant identities")
    phi = lck.phi
    lam = lck.lcs.lam
    # v = B^{-1} phi
    phi_vec = [phi.coefficient((j,)) for j in range(n)]
    v, _, _ = linalg.solve(B, phi_vec, g.zero())
    lam_vec = [lam.coefficient((j,)) for j in range(n)]
    w, _, _ = linalg.solve(B, lam_vec, g.zero())
    if bpair(w, w).is_zero():
        raise IsotropicLeeVector("B^{-1} lam is isotropic")

    adv = g.ad(v)
    dphi = ce_d(phi)
    ok = True
    for i in range(n):
        ei = g.basis_vector(i)
        for j in range(i + 1, n):
            ej = g.basis_vector(j)
            lhs = dphi.evaluate(ei, ej)
            rhs = -bpair(g.bracket(v, ei), ej)
            if lhs != rhs:
                ok = False
    report.check("d(phi) = B o (-ad_v)", ok)

    from .lie_core import center as center_of
    z = center_of(g)
    report.check("A_g xi central (B^{-1} lam in the center)",
                 z.contains(w))
    rk, _ = linalg.rank(adv)
    report.check(f"rank(ad_v) = {rk} >= dim - 2", rk >= n - 2)
    zv = centralizer(g, v)
    report.info("dim Z_g(v)", zv.dim)
    s = derived_subalgebra(g)
    inter = _intersection_dim(zv.span, s.span, g.zero())
    report.check(f"dim Z_s(v) = {inter} == 1", inter == 1)
    return report, {"v": v, "rank_ad_v": rk, "dim_Zg_v": zv.dim,
                    "dim_Zs_v": inter}


def _intersection_dim(span_a, span_b, zero):
    if not span_a or not span_b:
        return 0
    ra, _ = linalg.rank(span_a)
    rb, _ = linalg.rank(span_b)
    rab, _ = linalg.rank(span_a + span_b)
    return ra + rb - rab
