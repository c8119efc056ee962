"""Dense linear algebra over the base field F_m, table-driven.

Matrices are small (n <= 32) numpy arrays of base-field codes; everything
here is plain Gaussian elimination written against a GaloisField's tables.
"""

from __future__ import annotations

import numpy as np

from .fields import GaloisField


def mat_mul(field: GaloisField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, k = a.shape
    k2, w = b.shape
    assert k == k2
    out = np.zeros((n, w), dtype=np.uint8)
    add, mul = field.add, field.mul
    for i in range(n):
        for j in range(w):
            acc = 0
            for t in range(k):
                acc = add[acc, mul[a[i, t], b[t, j]]]
            out[i, j] = acc
    return out


def row_echelon(field: GaloisField, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns (copy; input untouched)."""
    a = np.array(mat, dtype=np.uint8)
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv_table
    rows, cols = a.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r, c]), None)
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        s = inv[a[rank, c]]
        for j in range(cols):
            a[rank, j] = mul[s, a[rank, j]]
        for r in range(rows):
            if r != rank and a[r, c]:
                f = neg[a[r, c]]
                for j in range(cols):
                    a[r, j] = add[a[r, j], mul[f, a[rank, j]]]
        pivots.append(c)
        rank += 1
        if rank == rows:
            break
    return a, pivots


def rank(field: GaloisField, mat: np.ndarray) -> int:
    _, pivots = row_echelon(field, mat)
    return len(pivots)


def inverse(field: GaloisField, mat: np.ndarray) -> np.ndarray:
    n = mat.shape[0]
    assert mat.shape == (n, n)
    aug = np.zeros((n, 2 * n), dtype=np.uint8)
    aug[:, :n] = mat
    aug[np.arange(n), n + np.arange(n)] = 1
    red, pivots = row_echelon(field, aug)
    if pivots[:n] != list(range(n)):
        raise np.linalg.LinAlgError("matrix is singular over the field")
    return red[:, n:].copy()


def is_invertible(field: GaloisField, mat: np.ndarray) -> bool:
    return mat.shape[0] == mat.shape[1] and rank(field, mat) == mat.shape[0]
