"""A tour of the exact exterior calculus on a Lie algebra.

Run:  python3 demos/01_exterior_calculus.py
"""

from lieform.catalog import gl2r, u2
from lieform.exterior import (KForm, ce_d, twisted_cohomology_dim, twisted_d,
                              wedge)

print("== the algebra u(2) = R e0 + su(2) ==")
g = u2()
print("basis:", " ".join(g.basis_names))
print("Jacobi check:", "pass" if g.check_jacobi() else "FAIL")
for i, j in [(1, 2), (2, 3), (3, 1)]:
    vec = g.bracket_basis(i, j)
    print(f"[{g.basis_names[i]}, {g.basis_names[j]}] =",
          " + ".join(f"({c}){g.basis_names[k]}"
                     for k, c in enumerate(vec) if not c.is_zero()))

print()
print("== differentials of the dual basis ==")
for i in range(g.dim):
    print(f"d(e^{i}) = {ce_d(KForm.basis_oneform(g, i))}")

print()
print("== the standard lcs form ==")
e = lambda *idx: KForm.monomial(g, idx)
omega = e(0, 1) + e(2, 3)
lam = e(0).scaled(-1)
print("omega          =", omega)
print("d(omega)       =", ce_d(omega))
print("lam ^ omega    =", wedge(lam, omega))
print("so d(omega) = lam ^ omega:",
      (ce_d(omega) - wedge(lam, omega)).is_zero())
print("d_lam(omega)   =", twisted_d(omega, lam), "  (omega is d_lam-closed)")

print()
print("== twisted cohomology ==")
for gz in (u2(), gl2r()):
    lam0 = KForm(gz, 1, {(0,): -gz.one()})
    for k in range(gz.dim + 1):
        dim, locus = twisted_cohomology_dim(gz, lam0, k)
        print(f"{gz.name}: dim H^{k} twisted by -e^0 = {dim}")
    print()
