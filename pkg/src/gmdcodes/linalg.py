"""Dense linear algebra over GF(q) on integer-coded numpy arrays."""

from __future__ import annotations

import numpy as np

from .gf import FieldSpec


def _tables(F: FieldSpec):
    if not F.has_tables():
        raise ValueError(f"dense linear algebra needs q <= 256, got q={F.q}")
    return F.add_table, F.mul_table, F.neg_table, F.inv_table


def rref(A, F: FieldSpec):
    """Reduced row echelon form.  Returns ``(R, pivots)``; zero rows dropped."""
    add, mul, neg, inv = _tables(F)
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    nrows, ncols = R.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = mul[inv[R[row, col]], R[row]]
        for r in range(nrows):
            if r != row and R[r, col]:
                R[r] = add[R[r], mul[neg[R[r, col]], R[row]]]
        pivots.append(col)
        row += 1
    return R[:row], pivots


def rank(A, F: FieldSpec) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, F)[1])


def nullspace(A, F: FieldSpec):
    """Basis of {x : A x = 0} as rows of a matrix."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref(A, F)
    neg = F.neg_table
    free = [c for c in range(ncols) if c not in piv]
    N = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        N[i, fc] = 1
        for r, pc in enumerate(piv):
            N[i, pc] = neg[R[r, fc]]
    return N


def matmul(A, B, F: FieldSpec):
    """Matrix product over GF(q)."""
    add, mul, _, _ = _tables(F)
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.k == 1:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = add[out, mul[A[:, j][:, None], B[j][None, :]]]
    return out
