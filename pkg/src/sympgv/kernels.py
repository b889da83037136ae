"""Hot inner loops: GF(q) row reduction and exhaustive codeword weight scans.

Two interchangeable implementations exist for each kernel:

* jitted loops (numba ``@njit``), the default when numba is importable;
* a pure-numpy path (blockwise for the weight scan).

Selection is by the ``SYMPGV_BACKEND`` environment variable: ``auto``
(default), ``numba`` (error if numba is missing) or ``numpy``.  Both paths
return bit-identical results; ``tests/test_kernels.py`` checks this and
``benchmarks/bench_backends.py`` compares their speed.

Codeword enumeration order is lexicographic over coefficient tuples
(big-endian base q), so index ``i`` in [1, q^k) *is* the coefficient tuple of
the i-th codeword.  The scan returns the first index attaining the minimum,
which makes reported witnesses reproducible.
"""

from __future__ import annotations

import os

import numpy as np

_BACKEND_REQUEST = os.environ.get("SYMPGV_BACKEND", "auto").lower()
if _BACKEND_REQUEST not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"SYMPGV_BACKEND={_BACKEND_REQUEST!r} not recognized; "
        f"use 'auto', 'numba' or 'numpy'"
    )

_use_numba = False
if _BACKEND_REQUEST in ("auto", "numba"):
    try:
        from numba import njit

        _use_numba = True
    except ImportError:
        if _BACKEND_REQUEST == "numba":
            raise ImportError("SYMPGV_BACKEND=numba but numba is not installed")


def backend_name() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return "numba" if _use_numba else "numpy"


# ---------------------------------------------------------------------------
# reduced row echelon form over GF(q)
# ---------------------------------------------------------------------------

def _rref_loops(mat, add, mul, neg, inv):
    """In-place RREF; returns (rank, pivot column array of length ncols)."""
    nrows, ncols = mat.shape
    pivots = np.empty(ncols, dtype=np.int64)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if mat[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(ncols):
                tmp = mat[r, j]
                mat[r, j] = mat[pr, j]
                mat[pr, j] = tmp
        f = inv[mat[r, c]]
        if f != 1:
            for j in range(ncols):
                mat[r, j] = mul[f, mat[r, j]]
        for i in range(nrows):
            if i != r and mat[i, c] != 0:
                g = neg[mat[i, c]]
                for j in range(ncols):
                    mat[i, j] = add[mat[i, j], mul[g, mat[r, j]]]
        pivots[r] = c
        r += 1
    return r, pivots


def _rref_numpy(mat, add, mul, neg, inv):
    """Same contract as :func:`_rref_loops`, rows manipulated as numpy slices."""
    nrows, ncols = mat.shape
    pivots = np.empty(ncols, dtype=np.int64)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            mat[[r, pr]] = mat[[pr, r]]
        f = inv[mat[r, c]]
        if f != 1:
            mat[r] = mul[f][mat[r]]
        col = mat[:, c].copy()
        col[r] = 0
        for i in np.nonzero(col)[0]:
            mat[i] = add[mat[i], mul[neg[mat[i, c]]][mat[r]]]
        pivots[r] = c
        r += 1
    return r, pivots


# ---------------------------------------------------------------------------
# exhaustive minimum symplectic weight
# ---------------------------------------------------------------------------

def _min_weight_loops(rows, half, add, sub, mul, limit):
    """Scan codewords 1..limit-1 (lex order); return (min weight, first index).

    ``rows`` is the (k, 2*half) generator matrix; ``limit`` must equal q^k.
    The running codeword is updated incrementally as the coefficient odometer
    advances, so the cost per codeword is O(2*half) table lookups.
    """
    k, ncols = rows.shape
    q = add.shape[0]
    digits = np.zeros(k, dtype=np.int64)
    cw = np.zeros(ncols, dtype=np.int64)
    best = half + 1
    best_idx = np.int64(-1)
    idx = np.int64(0)
    while idx < limit - 1:
        j = k - 1
        while digits[j] == q - 1:
            digits[j] = 0
            for t in range(ncols):
                x = rows[j, t]
                if x != 0:
                    cw[t] = sub[cw[t], mul[q - 1, x]]
            j -= 1
        old = digits[j]
        digits[j] = old + 1
        for t in range(ncols):
            x = rows[j, t]
            if x != 0:
                cw[t] = add[cw[t], sub[mul[old + 1, x], mul[old, x]]]
        idx += 1
        w = 0
        for t in range(half):
            if cw[t] != 0 or cw[t + half] != 0:
                w += 1
        if w < best:
            best = w
            best_idx = idx
            if best == 1:
                break
    return best, best_idx


_SCAN_BLOCK = 1 << 14


def _min_weight_numpy(rows, half, add, sub, mul, limit):
    """Blockwise numpy version of :func:`_min_weight_loops`; identical output."""
    k = rows.shape[0]
    q = add.shape[0]
    # prime fields reduce to integer matmul mod q; extension fields need the
    # table-gather path (their digit encoding is not linear over the integers)
    elems = np.arange(q, dtype=np.int64)
    plain_mod = np.array_equal(add, (elems[:, None] + elems[None, :]) % q)
    best = half + 1
    best_idx = -1
    radix = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(1, limit, _SCAN_BLOCK):
        idxs = np.arange(start, min(start + _SCAN_BLOCK, limit), dtype=np.int64)
        digits = idxs[:, None] // radix[None, :] % q
        if plain_mod:
            acc = digits @ rows % q
        else:
            acc = np.zeros((idxs.size, rows.shape[1]), dtype=np.int64)
            for j in range(k):
                acc = add[acc, mul[digits[:, j, None], rows[j][None, :]]]
        w = ((acc[:, :half] != 0) | (acc[:, half:] != 0)).sum(axis=1)
        block_min = int(w.min())
        if block_min < best:
            best = block_min
            best_idx = int(idxs[int(np.argmax(w == block_min))])
            if best == 1:
                break
    return best, best_idx


# ---------------------------------------------------------------------------
# backend dispatch
# ---------------------------------------------------------------------------

if _use_numba:
    _rref_kernel = njit(cache=True)(_rref_loops)
    _min_weight_kernel = njit(cache=True)(_min_weight_loops)
else:
    _rref_kernel = _rref_numpy
    _min_weight_kernel = _min_weight_numpy


def rref_in_place(mat: np.ndarray, add, mul, neg, inv) -> tuple[int, np.ndarray]:
    """Reduce ``mat`` to RREF in place; returns (rank, pivot columns)."""
    rank, pivots = _rref_kernel(mat, add, mul, neg, inv)
    return int(rank), pivots[:rank].copy()


def min_weight_scan(rows: np.ndarray, half: int, add, sub, mul,
                    limit: int) -> tuple[int, int]:
    """Minimum symplectic weight over all q^k - 1 nonzero codewords.

    Returns ``(weight, index)`` where ``index`` is the lexicographically first
    coefficient tuple (as a base-q big-endian integer) attaining the minimum.
    """
    if rows.shape[0] == 0:
        raise ValueError("weight scan needs at least one generator row")
    if limit > 1 << 62:  # enumeration indices must stay in int64
        raise ValueError(f"scan of {limit} codewords is out of range")
    best, idx = _min_weight_kernel(
        np.ascontiguousarray(rows, dtype=np.int64), half, add, sub, mul, limit
    )
    return int(best), int(idx)
