"""Exhaustive enumeration of symplectic self-orthogonal codes.

Ground truth for the counting formulas: depth-first extension from isotropic
lines, one level of dimension at a time.  Every code of dimension j is
extended by each nonzero one-dimensional subspace of dual(C)/C (one
normalized coefficient tuple per direction), canonicalized to RREF and
deduplicated globally, so the census has set semantics regardless of the
order codes are discovered in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from . import linalg
from .counting import Variant, count_self_orthogonal
from .errors import CapExceededError
from .field import Field
from .symplectic import SympCode, SympVector, symp_inner_many

DEFAULT_CENSUS_CAP = 10**7

# Canonical keys store one byte per entry.
_MAX_CENSUS_Q = 127


@dataclass(frozen=True)
class CensusReport:
    """Census outcome: total count plus optional per-vector statistics.

    ``per_vector_counts`` maps each requested fixed vector u to
    (number of codes containing u, number of codes whose dual contains u).
    The first never exceeds the second: u in C forces u in dual(C) for
    self-orthogonal C.
    """

    q: int
    n: int
    k: int
    total: int
    per_vector_counts: Optional[Mapping[SympVector, tuple[int, int]]] = None
    codes: Optional[tuple[SympCode, ...]] = None


def _key(mat: np.ndarray) -> bytes:
    return mat.astype(np.int8).tobytes()


def _unkey(key: bytes, rows: int, cols: int) -> np.ndarray:
    return np.frombuffer(key, dtype=np.int8).reshape(rows, cols).astype(np.int64)


def _isotropic_lines(field: Field, n: int) -> set[bytes]:
    """All one-dimensional codes, as canonical keys (every line is isotropic)."""
    q = field.q
    nn = 2 * n
    keys: set[bytes] = set()
    vec = np.zeros(nn, dtype=np.int64)
    for lead in range(nn):
        vec[:] = 0
        vec[lead] = 1
        for tail in itertools.product(range(q), repeat=nn - lead - 1):
            vec[lead + 1:] = tail
            keys.add(_key(vec.reshape(1, nn)))
    return keys


def _extend_once(field: Field, n: int, mat: np.ndarray) -> list[bytes]:
    """Keys of all (j+1)-dimensional self-orthogonal extensions of mat."""
    nn = 2 * n
    j = mat.shape[0]
    gram = np.hstack([mat[:, n:], field.neg[mat[:, :n]]])
    dual = linalg.nullspace(field, gram)
    code_pivots = set(int(p) for p in linalg.pivot_columns(mat))
    complement = np.array(
        [row for row in dual if int(np.nonzero(row)[0][0]) not in code_pivots],
        dtype=np.int64,
    ).reshape(-1, nn)
    # one representative per direction in dual/C: first nonzero coefficient 1
    dim = complement.shape[0]
    out = []
    stacked = np.empty((j + 1, nn), dtype=np.int64)
    stacked[:j] = mat
    coeffs = np.zeros(dim, dtype=np.int64)
    for lead in range(dim):
        coeffs[:] = 0
        coeffs[lead] = 1
        for tail in itertools.product(range(field.q), repeat=dim - lead - 1):
            coeffs[lead + 1:] = tail
            stacked[j] = linalg.linear_combination(field, coeffs, complement)
            reduced, _ = linalg.rref(field, stacked)
            out.append(_key(reduced))
    return out


def _precheck(field: Field, n: int, k: int, cap: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if field.q > _MAX_CENSUS_Q:
        raise CapExceededError(f"census supports q <= {_MAX_CENSUS_Q}")
    for j in range(1, k + 1):
        estimate = count_self_orthogonal(field.q, n, j, Variant.PROJECTIVE)
        if estimate > cap:
            raise CapExceededError(
                f"census at dimension {j} holds {estimate} codes, "
                f"exceeding the cap {cap}"
            )


def enumerate_so_codes(field: Field, n: int, k: int, *,
                       census_cap: int = DEFAULT_CENSUS_CAP,
                       fixed_vectors: Sequence[SympVector] = (),
                       want_codes: bool = False) -> CensusReport:
    """Enumerate every symplectic self-orthogonal [2n, k] code over GF(q).

    Raises :class:`CapExceededError` if the closed-form pre-estimate for any
    intermediate dimension exceeds ``census_cap``.  With ``want_codes`` the
    report carries the full list, sorted by generator matrix entries.
    """
    _precheck(field, n, k, census_cap)
    for u in fixed_vectors:
        if u.field != field or u.n != n:
            raise ValueError("fixed vector does not live in F_q^{2n}")
        if u.is_zero():
            raise ValueError("fixed vector must be nonzero")
    nn = 2 * n

    level = _isotropic_lines(field, n)
    for j in range(1, k):
        nxt: set[bytes] = set()
        for key in level:
            nxt.update(_extend_once(field, n, _unkey(key, j, nn)))
        level = nxt

    per_vector = None
    if fixed_vectors:
        per_vector = {}
        mats = [_unkey(key, k, nn) for key in level]
        for u in fixed_vectors:
            containing = 0
            dual_containing = 0
            for mat in mats:
                pivots = linalg.pivot_columns(mat)
                if not np.any(symp_inner_many(
                        field, mat, np.broadcast_to(u.vec, mat.shape))):
                    dual_containing += 1
                    # u in C implies u in dual(C); only then can C contain u
                    if linalg.in_row_space(field, mat, pivots, u.vec):
                        containing += 1
            per_vector[u] = (containing, dual_containing)

    codes = None
    if want_codes:
        ordered = sorted(level, key=lambda key: tuple(_unkey(key, k, nn).ravel()))
        codes = tuple(SympCode(field, n, _unkey(key, k, nn)) for key in ordered)

    return CensusReport(q=field.q, n=n, k=k, total=len(level),
                        per_vector_counts=per_vector, codes=codes)


def oracle_count_containing(field: Field, n: int, k: int, u: SympVector, *,
                            census_cap: int = DEFAULT_CENSUS_CAP) -> int:
    """Census count of self-orthogonal [2n, k] codes whose row space contains u."""
    report = enumerate_so_codes(field, n, k, census_cap=census_cap,
                                fixed_vectors=(u,))
    return report.per_vector_counts[u][0]


def oracle_count_dual_containing(field: Field, n: int, k: int, u: SympVector, *,
                                 census_cap: int = DEFAULT_CENSUS_CAP) -> int:
    """Census count of self-orthogonal [2n, k] codes with u in the dual.

    Equivalently the codes all of whose generator rows pair to zero with u.
    """
    report = enumerate_so_codes(field, n, k, census_cap=census_cap,
                                fixed_vectors=(u,))
    return report.per_vector_counts[u][1]
