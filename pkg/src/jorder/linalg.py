"""Exact Gaussian elimination kernels shared by every higher layer.

All routines are deterministic: pivoting always selects the first nonzero
entry in scan order, so reduced forms, nullspace bases, and solutions are
canonical for a given input. No floating point anywhere.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix


def rref(field, a):
    """Reduced row echelon form.

    Returns (r, pivots) where pivots lists the pivot column indices in order.
    """
    # canonicalize first: raw products (e.g. unreduced tensordot output) may
    # hold representatives like 2 over GF(2) that compare nonzero but are not
    r = field.copy(field.canon(np.atleast_2d(a)))
    nrows, ncols = r.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        pivot_row = None
        for i in range(row, nrows):
            if r[i, col] != field.zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            r[[row, pivot_row]] = r[[pivot_row, row]]
        r[row] = field.canon(field.smul(field.inv_scalar(r[row, col]), r[row]))
        col_vals = field.copy(r[:, col].reshape(-1, 1))
        col_vals[row, 0] = field.zero
        r = field.canon(field.sub(r, col_vals * r[row].reshape(1, -1)))
        pivots.append(col)
        row += 1
    return r, pivots


def rank(field, a):
    return len(rref(field, a)[1])


def row_basis(field, a):
    """Canonical basis (as rows) of the row space of a."""
    r, pivots = rref(field, a)
    return r[: len(pivots)]


def column_basis(field, a):
    """Canonical basis (as columns) of the column space of a."""
    return row_basis(field, np.atleast_2d(a).T).T


def rank_nullspace(field, a):
    """Rank and right nullspace.

    Returns (rank, ns) with ns of shape (ncols, ncols - rank); the columns are
    the canonical echelon basis of {x : a x = 0} read off the reduced form
    (one basis vector per free column, unit coordinate at that column).
    """
    a = np.atleast_2d(a)
    r, pivots = rref(field, a)
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in pivots]
    ns = field.zeros((ncols, len(free)))
    for k, f in enumerate(free):
        ns[f, k] = field.one
        for i, p in enumerate(pivots):
            ns[p, k] = field.neg(r[i, f])
    return len(pivots), field.canon(ns)


def nullspace(field, a):
    return rank_nullspace(field, a)[1]


def solve(field, a, b):
    """Exact solution of a x = b, or None when the system is inconsistent.

    b may be a vector or a matrix of stacked right-hand sides. The solution is
    canonical: free variables are set to zero. When b is a vector the result
    is a vector.
    """
    a = np.atleast_2d(a)
    vector_rhs = np.asarray(b).ndim == 1
    bm = np.asarray(b).reshape(-1, 1) if vector_rhs else np.asarray(b)
    if bm.shape[0] != a.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} vs {bm.shape}")
    ncols = a.shape[1]
    aug = np.concatenate([field.canon(a), field.canon(bm)], axis=1)
    r, pivots = rref(field, aug)
    if any(p >= ncols for p in pivots):
        return None
    x = field.zeros((ncols, bm.shape[1]))
    for i, p in enumerate(pivots):
        x[p] = r[i, ncols:]
    x = field.canon(x)
    return x.reshape(-1) if vector_rhs else x


def invert(field, a):
    a = np.atleast_2d(a)
    n, m = a.shape
    if n != m:
        raise SingularMatrix(f"cannot invert a {n}x{m} matrix")
    x = solve(field, a, field.eye(n))
    if x is None or rank(field, a) < n:
        raise SingularMatrix("matrix is singular")
    return x


def kronecker_product(field, a, b):
    return field.kron(np.atleast_2d(a), np.atleast_2d(b))


def in_row_span(field, basis_rows, v):
    """Whether vector v lies in the span of the given rows."""
    basis_rows = np.atleast_2d(basis_rows)
    if basis_rows.shape[0] == 0:
        return field.is_zero(v)
    return solve(field, basis_rows.T, np.asarray(v).reshape(-1)) is not None


def coords_in_row_basis(field, basis_rows, vectors):
    """Coordinates of the given row vectors in a row basis; None if outside."""
    basis_rows = np.atleast_2d(basis_rows)
    vm = np.atleast_2d(vectors)
    sol = solve(field, basis_rows.T, vm.T)
    return None if sol is None else sol.T


def span_dim_after_adding(field, basis_rows, extra_rows):
    stacked = np.concatenate([np.atleast_2d(basis_rows), np.atleast_2d(extra_rows)], axis=0)
    return rank(field, stacked)


def intersect_row_spaces(field, rows_a, rows_b):
    """Canonical row basis of the intersection of two row spaces."""
    rows_a, rows_b = np.atleast_2d(rows_a), np.atleast_2d(rows_b)
    if rows_a.shape[0] == 0 or rows_b.shape[0] == 0:
        return field.zeros((0, rows_a.shape[1]))
    # x = c_a . rows_a = c_b . rows_b; solve [rows_a^T | -rows_b^T] kernel
    stacked = np.concatenate([rows_a.T, field.canon(field.neg(rows_b.T))], axis=1)
    _, ns = rank_nullspace(field, stacked)
    if ns.shape[1] == 0:
        return field.zeros((0, rows_a.shape[1]))
    coeff_a = ns[: rows_a.shape[0]].T
    return row_basis(field, field.matmul(coeff_a, rows_a))


def random_invertible(field, gen, n):
    """Seeded invertible matrix: retry until full rank (fast at desk sizes)."""
    while True:
        m = field.rand_mat(gen, n, n)
        if rank(field, m) == n:
            return m
