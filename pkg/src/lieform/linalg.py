"""Exact linear algebra over the scalar field (or its complexification).

Matrices are plain lists of row lists.  Elimination divides by pivots inside
the rational-function field, which is exact; whenever a pivot depends on
parameters the computed rank/kernel is *generic* and the pivot numerator is
recorded as an exclusion polynomial (the vanishing locus) instead of being
resolved.
"""

from __future__ import annotations

from .scalars import CScalar, Scalar


class LinalgError(Exception):
    pass


def pivot_locus(x):
    """Exclusion polynomial of a pivot, or None when the pivot is constant."""
    if isinstance(x, CScalar):
        x = x.re * x.re + x.im * x.im
    if isinstance(x, Scalar) and not x.num.is_constant():
        return x.num
    return None


def merge_locus(locus, extra):
    for p in extra:
        if p is not None and not any(q == p for q in locus):
            locus.append(p)
    return locus


def mat_copy(rows):
    return [list(r) for r in rows]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(1, k)), a[i][0] * b[0][j])
             for j in range(m)] for i in range(n)]


def mat_vec(a, v):
    return [sum((row[t] * v[t] for t in range(1, len(v))), row[0] * v[0])
            for row in a]


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def vec_is_zero(v):
    return all(x.is_zero() for x in v)


def _row_echelon(rows):
    """In-place reduced row echelon form.

    Returns (pivot_cols, locus) where locus lists the non-constant pivot
    numerators encountered (the generic-rank exclusion polynomials).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    locus = []
    pivot_cols = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        # prefer a parameter-free pivot to keep the locus small
        choice = None
        for i in range(r, m):
            if not rows[i][c].is_zero():
                if pivot_locus(rows[i][c]) is None:
                    choice = i
                    break
                if choice is None:
                    choice = i
        if choice is None:
            continue
        rows[r], rows[choice] = rows[choice], rows[r]
        piv = rows[r][c]
        merge_locus(locus, [pivot_locus(piv)])
        inv = piv.inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
    return pivot_cols, locus


def rref(rows):
    rows = mat_copy(rows)
    pivot_cols, locus = _row_echelon(rows)
    return rows, pivot_cols, locus


def rank(rows):
    """Generic rank and the exclusion locus under which it holds."""
    if not rows:
        return 0, []
    _, pivot_cols, locus = rref(rows)
    return len(pivot_cols), locus


def nullspace(rows, zero):
    """Basis of the (generic) kernel of the matrix; vectors of length n."""
    if not rows:
        return [], []
    n = len(rows[0])
    red, pivot_cols, locus = rref(rows)
    one = zero + 1
    free = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for r, pc in enumerate(pivot_cols):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis, locus


def solve(rows, rhs, zero):
    """One solution of A x = b, or None when inconsistent (generically).

    Returns (particular, kernel_basis, locus).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivot_cols, locus = rref(aug)
    if n in pivot_cols:
        return None, [], locus
    x = [zero] * n
    for r, pc in enumerate(pivot_cols):
        x[pc] = red[r][n]
    kernel, klocus = nullspace(rows, zero) if m else ([], [])
    merge_locus(locus, klocus)
    return x, kernel, locus


def det(rows):
    """Exact determinant by fraction-field elimination."""
    n = len(rows)
    if n == 0:
        raise LinalgError("empty matrix")
    a = mat_copy(rows)
    d = None
    sign = 1
    for c in range(n):
        piv_row = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                piv_row = i
                break
        if piv_row is None:
            return rows[0][0] - rows[0][0]  # zero of the right kind
        if piv_row != c:
            a[c], a[piv_row] = a[piv_row], a[c]
            sign = -sign
        piv = a[c][c]
        d = piv if d is None else d * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if not a[i][c].is_zero():
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d if sign > 0 else -d


def inverse(rows, zero):
    """Exact inverse; raises LinalgError when (generically) singular."""
    n = len(rows)
    one = zero + 1
    aug = [list(r) + [one if i == j else zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivot_cols, locus = rref(aug)
    if len(pivot_cols) < n or pivot_cols[:n] != list(range(n)):
        raise LinalgError("matrix is singular")
    return [row[n:] for row in red], locus


def in_span(vectors, v, zero):
    """Membership of v in span(vectors) by a rank comparison."""
    if not vectors:
        return vec_is_zero(v)
    base = [list(w) for w in vectors]
    r0, _ = rank(base)
    r1, _ = rank(base + [list(v)])
    return r0 == r1
