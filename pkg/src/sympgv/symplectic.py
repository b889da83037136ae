"""Vectors and linear codes in F_q^{2n} under the symplectic inner product.

A length-2n vector is split as (a | b) with n coordinates per half; the
inner product of (a | b) and (a' | b') is the Euclidean product a.b' - b.a'.
The form is alternating, so every vector pairs to zero with itself and every
one-dimensional code is self-orthogonal.

Codes are held in canonical reduced-row-echelon generator form, which makes
subspace equality a plain matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO, Union

import numpy as np

from . import linalg
from .errors import CapExceededError
from .field import Field
from .kernels import min_weight_scan

# Exhaustive codeword enumeration refuses to start above this many codewords.
DEFAULT_CODEWORD_CAP = 1 << 24


@dataclass(frozen=True, eq=False)
class SympVector:
    """Element of F_q^{2n} stored as one flat length-2n array (a-half first)."""

    field: Field
    vec: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(self.vec, dtype=np.int64)
        if v.ndim != 1 or v.size % 2 != 0:
            raise ValueError("symplectic vector needs an even flat length")
        if v.size and (v.min() < 0 or v.max() >= self.field.q):
            raise ValueError(f"entries must lie in [0, {self.field.q})")
        v.setflags(write=False)
        object.__setattr__(self, "vec", v)

    @classmethod
    def from_pair(cls, field: Field, a: Iterable[int], b: Iterable[int]) -> "SympVector":
        a = list(a)
        b = list(b)
        if len(a) != len(b):
            raise ValueError(f"halves have lengths {len(a)} != {len(b)}")
        return cls(field, np.array(a + b, dtype=np.int64))

    @classmethod
    def zero(cls, field: Field, n: int) -> "SympVector":
        return cls(field, np.zeros(2 * n, dtype=np.int64))

    @classmethod
    def parse(cls, field: Field, text: str) -> "SympVector":
        """Parse 'a1,..,an|b1,..,bn'."""
        halves = text.split("|")
        if len(halves) != 2:
            raise ValueError(f"expected 'a1,..,an|b1,..,bn', got {text!r}")
        a = [int(t) for t in halves[0].split(",") if t.strip() != ""]
        b = [int(t) for t in halves[1].split(",") if t.strip() != ""]
        return cls.from_pair(field, a, b)

    @property
    def n(self) -> int:
        return self.vec.size // 2

    @property
    def a(self) -> np.ndarray:
        return self.vec[: self.n]

    @property
    def b(self) -> np.ndarray:
        return self.vec[self.n:]

    def weight(self) -> int:
        """Symplectic weight: positions where the pair (a_i, b_i) is nonzero."""
        return int(np.count_nonzero((self.a != 0) | (self.b != 0)))

    def is_zero(self) -> bool:
        return not np.any(self.vec)

    def __add__(self, other: "SympVector") -> "SympVector":
        _check_same_space(self, other)
        return SympVector(self.field, self.field.add[self.vec, other.vec])

    def __sub__(self, other: "SympVector") -> "SympVector":
        _check_same_space(self, other)
        return SympVector(self.field, self.field.sub[self.vec, other.vec])

    def scale(self, c: int) -> "SympVector":
        return SympVector(self.field, self.field.mul[self.field.check(c)][self.vec])

    def render(self) -> str:
        return (",".join(str(int(x)) for x in self.a)
                + "|" + ",".join(str(int(x)) for x in self.b))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SympVector) and self.field == other.field
                and np.array_equal(self.vec, other.vec))

    def __hash__(self) -> int:
        return hash((self.field, self.vec.tobytes()))

    def __repr__(self) -> str:
        return f"SympVector({self.render()!r}, q={self.field.q})"


def _check_same_space(u: SympVector, v: SympVector) -> None:
    if u.field != v.field:
        raise ValueError("vectors live over different fields")
    if u.n != v.n:
        raise ValueError(f"vectors have different lengths: n={u.n} vs n={v.n}")


def symp_inner(u: SympVector, v: SympVector) -> int:
    """Symplectic inner product <u, v> = a.b' - b.a' over GF(q)."""
    _check_same_space(u, v)
    f = u.field
    terms = f.sub[f.mul[u.a, v.b], f.mul[u.b, v.a]]
    return int(f.sum_reduce(terms, axis=0))


def symp_inner_many(field: Field, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    """Row-wise symplectic inner products of two (N, 2n) arrays."""
    n = us.shape[1] // 2
    terms = field.sub[field.mul[us[:, :n], vs[:, n:]],
                      field.mul[us[:, n:], vs[:, :n]]]
    return field.sum_reduce(terms, axis=1)


def symp_weight(u: SympVector) -> int:
    return u.weight()


def symp_distance(u: SympVector, v: SympVector) -> int:
    """Symplectic distance: weight of the difference."""
    return (u - v).weight()


def singleton_ok(n: int, k: int, d: int) -> bool:
    """Symplectic Singleton bound k + 2d <= 2n + 2 for a [2n, k, d] code."""
    return k + 2 * d <= 2 * n + 2


@dataclass(frozen=True, eq=False)
class SympCode:
    """Linear code in F_q^{2n}, canonical RREF generator matrix (k x 2n).

    Construct through :func:`code_from_rows` unless the rows are already a
    canonical RREF basis; the constructor validates canonicity.
    """

    field: Field
    n: int
    generators: np.ndarray

    def __post_init__(self):
        g = np.ascontiguousarray(self.generators, dtype=np.int64).reshape(-1, 2 * self.n)
        if g.size and (g.min() < 0 or g.max() >= self.field.q):
            raise ValueError(f"entries must lie in [0, {self.field.q})")
        if g.shape[0] > 2 * self.n:
            raise ValueError(f"dimension {g.shape[0]} exceeds length {2 * self.n}")
        if not linalg.is_rref(self.field, g):
            raise ValueError("generator matrix is not in canonical RREF; "
                             "use code_from_rows to canonicalize")
        g.setflags(write=False)
        object.__setattr__(self, "generators", g)

    @property
    def k(self) -> int:
        return self.generators.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    def rows(self) -> list[SympVector]:
        return [SympVector(self.field, r.copy()) for r in self.generators]

    def pivots(self) -> np.ndarray:
        return linalg.pivot_columns(self.generators)

    # -- subspace operations -------------------------------------------------

    def contains(self, u: SympVector) -> bool:
        _check_same_space_code(self, u)
        return linalg.in_row_space(self.field, self.generators, self.pivots(), u.vec)

    def dual(self) -> "SympCode":
        """Symplectic dual: all vectors pairing to zero with every codeword.

        Computed as the Euclidean nullspace of the generator matrix with the
        halves swapped and one half negated, then canonicalized; satisfies
        dim C + dim dual = 2n.
        """
        f = self.field
        g = self.generators
        gram_rows = np.hstack([g[:, self.n:], f.neg[g[:, : self.n]]])
        return SympCode(f, self.n, linalg.nullspace(f, gram_rows))

    def is_self_orthogonal(self) -> bool:
        """True iff every pair of generator rows pairs to zero.

        Diagonal pairs vanish automatically (the form is alternating), so
        only distinct row pairs are checked.
        """
        g = self.generators
        f = self.field
        for i in range(self.k):
            ui = SympVector(f, g[i].copy())
            for j in range(i + 1, self.k):
                if symp_inner(ui, SympVector(f, g[j].copy())) != 0:
                    return False
        return True

    def is_self_dual(self) -> bool:
        return self.k == self.n and self.is_self_orthogonal()

    # -- codeword enumeration --------------------------------------------------

    def codeword_count(self) -> int:
        return self.q**self.k

    def min_weight(self, cap: int = DEFAULT_CODEWORD_CAP) -> int:
        """Minimum symplectic weight over all nonzero codewords (exhaustive)."""
        return self.min_weight_witness(cap)[0]

    def min_weight_witness(self, cap: int = DEFAULT_CODEWORD_CAP
                           ) -> tuple[int, SympVector]:
        """Exhaustive minimum weight plus the first codeword attaining it.

        Traversal is lexicographic over coefficient tuples, so the witness is
        reproducible across runs and backends.
        """
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codeword")
        total = self.codeword_count()
        if total > cap:
            raise CapExceededError(
                f"enumerating {self.q}^{self.k} = {total} codewords exceeds "
                f"the cap {cap}"
            )
        f = self.field
        w, idx = min_weight_scan(self.generators, self.n, f.add, f.sub, f.mul, total)
        coeffs = _index_to_coeffs(idx, self.q, self.k)
        vec = linalg.linear_combination(f, coeffs, self.generators)
        return w, SympVector(f, vec)

    def codewords(self) -> Iterator[tuple[np.ndarray, SympVector]]:
        """Yield (coefficient tuple, codeword) for every nonzero codeword.

        Plain-python enumeration in the same lexicographic order as the
        kernels; intended for small codes, certification and tests.
        """
        f = self.field
        q = self.q
        digits = np.zeros(self.k, dtype=np.int64)
        cw = np.zeros(2 * self.n, dtype=np.int64)
        for _ in range(self.codeword_count() - 1):
            j = self.k - 1
            while digits[j] == q - 1:
                digits[j] = 0
                cw = f.sub[cw, f.mul[q - 1][self.generators[j]]]
                j -= 1
            old = int(digits[j])
            digits[j] = old + 1
            row = self.generators[j]
            cw = f.add[cw, f.sub[f.mul[old + 1][row], f.mul[old][row]]]
            yield digits.copy(), SympVector(f, cw.copy())

    # -- identity ------------------------------------------------------------

    def canonical_key(self) -> bytes:
        return self.generators.tobytes()

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SympCode) and self.field == other.field
                and self.n == other.n
                and np.array_equal(self.generators, other.generators))

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.canonical_key()))

    def __repr__(self) -> str:
        return f"SympCode(q={self.q}, n={self.n}, k={self.k})"


def _check_same_space_code(code: SympCode, u: SympVector) -> None:
    if code.field != u.field:
        raise ValueError("code and vector live over different fields")
    if code.n != u.n:
        raise ValueError(f"length mismatch: code n={code.n}, vector n={u.n}")


def _index_to_coeffs(idx: int, q: int, k: int) -> np.ndarray:
    coeffs = np.zeros(k, dtype=np.int64)
    for j in range(k - 1, -1, -1):
        coeffs[j] = idx % q
        idx //= q
    return coeffs


def code_from_rows(field: Field, n: int, rows) -> SympCode:
    """Canonical code spanned by the given rows (any rank, duplicates fine)."""
    if isinstance(rows, (list, tuple)) and rows and isinstance(rows[0], SympVector):
        rows = [r.vec for r in rows]
    mat = linalg.as_matrix(field, rows, 2 * n)
    reduced, _ = linalg.rref(field, mat)
    return SympCode(field, n, reduced)


def zero_code(field: Field, n: int) -> SympCode:
    return SympCode(field, n, np.zeros((0, 2 * n), dtype=np.int64))


def full_code(field: Field, n: int) -> SympCode:
    return SympCode(field, n, np.eye(2 * n, dtype=np.int64))


def singleton_check(code: SympCode, d: int) -> bool:
    """Fast infeasibility filter / sanity check for a claimed distance d."""
    return singleton_ok(code.n, code.k, d)


# ---------------------------------------------------------------------------
# sympcode v1 file format
# ---------------------------------------------------------------------------
#
#   sympcode v1
#   q=<int> [modulus=<c0,c1,...>]      (modulus written iff q is not prime)
#   n=<int>
#   k=<int>
#   ... k lines of 2n space-separated integers in [0, q), a-half then b-half
#
# Non-RREF rows are accepted and canonicalized on load; wrong row counts and
# out-of-range symbols are rejected.

MAGIC = "sympcode v1"


def code_to_text(code: SympCode) -> str:
    lines = [MAGIC]
    f = code.field
    if f.m == 1:
        lines.append(f"q={f.q}")
    else:
        lines.append(f"q={f.q} modulus=" + ",".join(str(c) for c in f.modulus))
    lines.append(f"n={code.n}")
    lines.append(f"k={code.k}")
    for row in code.generators:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def code_from_text(text: str) -> SympCode:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or lines[0] != MAGIC:
        raise ValueError(f"missing '{MAGIC}' header")
    if len(lines) < 4:
        raise ValueError("truncated code file")

    qparts = lines[1].split()
    if not qparts or not qparts[0].startswith("q="):
        raise ValueError(f"expected 'q=<int>' on line 2, got {lines[1]!r}")
    q = int(qparts[0][2:])
    modulus = None
    for extra in qparts[1:]:
        if extra.startswith("modulus="):
            modulus = [int(t) for t in extra[len("modulus="):].split(",")]
        else:
            raise ValueError(f"unrecognized field option {extra!r}")
    field = Field.from_order(q, modulus)

    if not lines[2].startswith("n="):
        raise ValueError(f"expected 'n=<int>' on line 3, got {lines[2]!r}")
    n = int(lines[2][2:])
    if not lines[3].startswith("k="):
        raise ValueError(f"expected 'k=<int>' on line 4, got {lines[3]!r}")
    k = int(lines[3][2:])
    if n < 1 or k < 0:
        raise ValueError(f"bad dimensions n={n}, k={k}")

    body = [ln for ln in lines[4:] if ln]
    if len(body) != k:
        raise ValueError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for ln in body:
        entries = [int(t) for t in ln.split()]
        if len(entries) != 2 * n:
            raise ValueError(f"row has {len(entries)} symbols, expected {2 * n}")
        if any(not 0 <= e < q for e in entries):
            raise ValueError(f"symbol out of range [0, {q}) in row {ln!r}")
        rows.append(entries)
    return code_from_rows(field, n, rows)


def write_code(code: SympCode, target: Union[str, TextIO]) -> None:
    if isinstance(target, (str, bytes)):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(code_to_text(code))
    else:
        target.write(code_to_text(code))


def read_code(source: Union[str, TextIO]) -> SympCode:
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8") as fh:
            return code_from_text(fh.read())
    return code_from_text(source.read())
