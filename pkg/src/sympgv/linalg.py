"""Linear algebra over GF(q): canonical RREF, nullspaces, membership."""

from __future__ import annotations

import numpy as np

from .field import Field
from .kernels import rref_in_place


def as_matrix(field: Field, rows, ncols: int) -> np.ndarray:
    """Validate and convert rows to an int64 matrix with entries in [0, q)."""
    mat = np.array(rows, dtype=np.int64).reshape(-1, ncols) if len(rows) else \
        np.zeros((0, ncols), dtype=np.int64)
    if mat.size and (mat.min() < 0 or mat.max() >= field.q):
        raise ValueError(f"matrix entries must lie in [0, {field.q})")
    return mat


def rref(field: Field, mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Canonical reduced row echelon form; zero rows dropped.

    Returns (reduced matrix, pivot columns).  The result is the unique RREF
    representative of the input row space.
    """
    work = np.ascontiguousarray(mat, dtype=np.int64).copy()
    if work.shape[0] == 0:
        return work, np.empty(0, dtype=np.int64)
    rank, pivots = rref_in_place(work, field.add, field.mul, field.neg, field.inv)
    return work[:rank], pivots


def pivot_columns(mat: np.ndarray) -> np.ndarray:
    """Pivot columns of a matrix already in RREF (first nonzero per row)."""
    return np.array([int(np.nonzero(row)[0][0]) for row in mat], dtype=np.int64)


def is_rref(field: Field, mat: np.ndarray) -> bool:
    """Check RREF shape: unit pivots, strictly increasing, unique in column."""
    last = -1
    for i, row in enumerate(mat):
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            return False
        p = int(nz[0])
        if p <= last or row[p] != 1:
            return False
        if np.any(mat[:, p] != (np.arange(mat.shape[0]) == i)):
            return False
        last = p
    return True


def reduce_vector(field: Field, reduced: np.ndarray, pivots: np.ndarray,
                  vec: np.ndarray) -> np.ndarray:
    """Residual of ``vec`` after elimination against RREF rows."""
    v = np.array(vec, dtype=np.int64)
    for i, p in enumerate(pivots):
        c = v[p]
        if c:
            v = field.add[v, field.mul[field.neg[c]][reduced[i]]]
    return v


def in_row_space(field: Field, reduced: np.ndarray, pivots: np.ndarray,
                 vec: np.ndarray) -> bool:
    return not np.any(reduce_vector(field, reduced, pivots, vec))


def nullspace(field: Field, mat: np.ndarray) -> np.ndarray:
    """Canonical (RREF) basis of {x : mat @ x = 0 over GF(q)}.

    ``mat`` rows are read as linear functionals; an empty matrix yields the
    identity basis of the full space.
    """
    ncols = mat.shape[1]
    reduced, pivots = rref(field, mat)
    rank = reduced.shape[0]
    free = [c for c in range(ncols) if c not in set(int(p) for p in pivots)]
    basis = np.zeros((ncols - rank, ncols), dtype=np.int64)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for ri in range(rank):
            basis[bi, int(pivots[ri])] = field.neg[reduced[ri, f]]
    out, _ = rref(field, basis)
    return out


def linear_combination(field: Field, coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Sum of coeffs[i] * rows[i] over GF(q)."""
    if rows.shape[0] == 0:
        return np.zeros(rows.shape[1], dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    terms = field.mul[coeffs[:, None], rows]
    return field.sum_reduce(terms, axis=0)
