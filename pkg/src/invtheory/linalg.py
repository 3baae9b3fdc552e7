"""Exact dense linear algebra over a coefficient field.

Matrices are lists (or tuples) of rows of field scalars.  Everything here is
plain Gaussian elimination; determinism comes from always picking the first
usable pivot row.
"""

from __future__ import annotations

from .fields import Field


def identity(n: int, field: Field):
    one, zero = field.one(), field.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_mul(a, b, field: Field):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        row_a = a[i]
        row = []
        for j in range(m):
            total = field.zero()
            for t in range(k):
                if not field.is_zero(row_a[t]):
                    total = field.add(total, field.mul(row_a[t], b[t][j]))
            row.append(total)
        out.append(tuple(row))
    return tuple(out)


def rref(rows, field: Field):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not field.is_zero(mat[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = field.inv(mat[r][col])
        if inv != field.one():
            mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][col]):
                factor = mat[i][col]
                mat[i] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(mat[i], mat[r])
                ]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, ncols: int, field: Field):
    """Kernel basis of the matrix, rows in reduced echelon form."""
    reduced, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    zero = field.zero()
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = field.one()
        for r, pc in enumerate(pivots):
            value = reduced[r][fc]
            if not field.is_zero(value):
                vec[pc] = field.neg(value)
        basis.append(vec)
    if not basis:
        return []
    canonical, _ = rref(basis, field)
    return [tuple(row) for row in canonical if any(not field.is_zero(v) for v in row)]


def det(rows, field: Field):
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(rows)
    mat = [list(r) for r in rows]
    result = field.one()
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if not field.is_zero(mat[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            return field.zero()
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            result = field.neg(result)
        pivot = mat[col][col]
        result = field.mul(result, pivot)
        inv = field.inv(pivot)
        for i in range(col + 1, n):
            if not field.is_zero(mat[i][col]):
                factor = field.mul(mat[i][col], inv)
                mat[i] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(mat[i], mat[col])
                ]
    return result


def is_invertible(rows, field: Field) -> bool:
    return not field.is_zero(det(rows, field))
