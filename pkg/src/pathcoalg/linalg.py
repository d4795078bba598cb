"""Exact Gauss-Jordan elimination over a :class:`~pathcoalg.fields.Field`.

Matrices are sequences of rows (lists or 2-d numpy object arrays).  Every
entry is coerced into the field first, so integer zeros produced by numpy
reductions never leak into floating point.
"""

from __future__ import annotations

import numpy as np

from .fields import QQ, Field


def _rows(a, field: Field, ncols: int | None = None) -> list[list]:
    rows = [[field(x) for x in row] for row in a]
    if ncols is not None and any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    return rows


def rref(a, field: Field = QQ, ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = _rows(a, field)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(a, field: Field = QQ) -> int:
    return len(rref(a, field)[1])


def nullspace(a, ncols: int, field: Field = QQ) -> list[list]:
    """Basis of {x : a x = 0} as a list of vectors of length ``ncols``."""
    rows, pivots = rref(a, field, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a, b, ncols: int, field: Field = QQ) -> list | None:
    """One solution x of a x = b, or None when the system is inconsistent."""
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rows, pivots = rref(aug, field, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[ncols]
    return x


def independent_subset(vectors, field: Field = QQ) -> list[int]:
    """Indices of a greedy maximal linearly independent subsequence."""
    kept: list[int] = []
    basis: list[list] = []
    for i, v in enumerate(vectors):
        trial = basis + [list(v)]
        if rank(trial, field) > len(basis):
            basis.append(list(v))
            kept.append(i)
    return kept


def kernel_basis(mat: np.ndarray, field: Field = QQ) -> np.ndarray:
    """Columns spanning the kernel of ``mat`` as an object array (n x k)."""
    n = mat.shape[1]
    vecs = nullspace(mat.tolist(), n, field)
    out = np.empty((n, len(vecs)), dtype=object)
    for j, v in enumerate(vecs):
        out[:, j] = v
    return out


def zeros(m: int, n: int, field: Field = QQ) -> np.ndarray:
    out = np.empty((m, n), dtype=object)
    out[...] = field.zero
    return out


def identity(n: int, field: Field = QQ) -> np.ndarray:
    out = zeros(n, n, field)
    for i in range(n):
        out[i, i] = field.one
    return out


def as_matrix(a, field: Field = QQ, shape: tuple[int, int] | None = None) -> np.ndarray:
    arr = np.array(a, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = field(x)
    return out


def matmul(a: np.ndarray, b: np.ndarray, field: Field = QQ) -> np.ndarray:
    """Product that stays in the field even for empty inner dimensions."""
    out = zeros(a.shape[0], b.shape[1], field)
    if a.shape[1] == 0:
        return out
    # matrices here are mostly zero; skip those entries instead of summing them
    brows = [[(j, x) for j, x in enumerate(row) if x != 0] for row in b]
    for i, row in enumerate(a):
        acc: dict[int, object] = {}
        for k, x in enumerate(row):
            if x == 0:
                continue
            for j, y in brows[k]:
                acc[j] = acc[j] + x * y if j in acc else x * y
        for j, v in acc.items():
            out[i, j] = v
    return out


def is_zero(mat: np.ndarray) -> bool:
    return all(x == 0 for x in mat.flat)
