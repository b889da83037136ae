"""Exact arithmetic in GF(q) for prime powers q = p^m.

Field elements are integers in [0, q): the base-p digit vector of the value
is the coefficient vector of the residue polynomial in the basis
{1, x, ..., x^{m-1}} (for m = 1 the value is the residue itself).  This
encoding is compact, hashable and gives a stable element order, which the
canonical-form machinery elsewhere relies on.

All arithmetic is table-driven.  The add/sub/mul tables are plain numpy
arrays so they can be consumed directly by both the jitted and the
pure-numpy kernels.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

import numpy as np

# Fixed published irreducible polynomials (Conway polynomials), coefficients
# low degree first, monic.  Embedded as constants so that the default field
# for a given q is identical across runs and platforms.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),              # x^2 + x + 1           over GF(2)
    8: (1, 1, 0, 1),           # x^3 + x + 1           over GF(2)
    9: (2, 2, 1),              # x^2 + 2x + 2          over GF(3)
    16: (1, 1, 0, 0, 1),       # x^4 + x + 1           over GF(2)
    25: (2, 4, 1),             # x^2 + 4x + 2          over GF(5)
    27: (1, 2, 0, 1),          # x^3 + 2x + 1          over GF(3)
    32: (1, 0, 1, 0, 0, 1),    # x^5 + x^2 + 1         over GF(2)
    49: (3, 6, 1),             # x^2 + 6x + 3          over GF(7)
    64: (1, 1, 0, 1, 1, 0, 1),  # x^6 + x^4 + x^3 + x + 1 over GF(2)
    81: (2, 0, 0, 2, 1),       # x^4 + 2x^3 + 2        over GF(3)
}

# Table-driven arithmetic holds three q x q tables; keep q small enough that
# this stays in the tens of megabytes.
MAX_FIELD_ORDER = 1024

# Irreducibility is checked by trial factorization, practical only for the
# small extension degrees this library targets.
MAX_EXTENSION_DEGREE = 6


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (small n only)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(coeffs: Sequence[int]) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a(x) mod b(x) over GF(p); coefficients low degree first."""
    a = [x % p for x in a]
    b = _poly_trim([x % p for x in b])
    inv_lead = pow(b[-1], -1, p)
    a = _poly_trim(a)
    while len(a) >= len(b) and a:
        f = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bc) % p
        a = _poly_trim(a)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial-factorization irreducibility over GF(p) for small degrees.

    Tests divisibility by every monic polynomial of degree up to deg/2.
    """
    c = _poly_trim([x % p for x in coeffs])
    deg = len(c) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if c[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_mod(c, divisor, p):
                return False
    return True


class Field:
    """GF(q) with q = p^m, table-driven arithmetic.

    Parameters
    ----------
    p : int
        Prime characteristic.
    m : int
        Extension degree; q = p^m.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree m over GF(p), coefficients
        low degree first.  Ignored for m = 1.  For m > 1 a built-in default
        exists for q in {4, 8, 9, 16, 25, 27, 32, 49, 64, 81}; other orders
        require an explicit modulus.

    Attributes
    ----------
    add, sub, mul : (q, q) int64 arrays, elementwise operation tables.
    neg : (q,) int64 array of additive inverses.
    inv : (q,) int64 array of multiplicative inverses (entry 0 is unused).
    """

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"characteristic p={p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        if m > MAX_EXTENSION_DEGREE:
            raise ValueError(
                f"extension degree m={m} exceeds the supported maximum "
                f"{MAX_EXTENSION_DEGREE}"
            )
        q = p**m
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"field order q={q} exceeds table limit {MAX_FIELD_ORDER}")

        self.p = p
        self.m = m
        self.q = q

        if m == 1:
            self.modulus: Optional[tuple[int, ...]] = None
        else:
            if modulus is None:
                if q not in DEFAULT_MODULI:
                    raise ValueError(
                        f"no built-in modulus for GF({q}); supply one explicitly"
                    )
                modulus = DEFAULT_MODULI[q]
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {m}, got coefficients {mod}"
                )
            if not is_irreducible(mod, p):
                raise ValueError(f"modulus {mod} is reducible over GF({p})")
            self.modulus = mod

        self._build_tables()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_order(cls, q: int, modulus: Optional[Sequence[int]] = None) -> "Field":
        """Build GF(q) from its order, factoring q as p^m."""
        if q < 2:
            raise ValueError(f"field order must be >= 2, got {q}")
        p = next((f for f in range(2, q + 1) if q % f == 0), q)
        m = 0
        rest = q
        while rest % p == 0:
            rest //= p
            m += 1
        if rest != 1:
            raise ValueError(f"q={q} is not a prime power")
        return cls(p, m, modulus)

    # -- element encoding ----------------------------------------------------

    def element_digits(self, value: int) -> tuple[int, ...]:
        """Base-p digits (polynomial coefficients, low degree first)."""
        return tuple(int(d) for d in self.digits[value])

    def _encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)[: self.m]):
            v = v * self.p + c % self.p
        return v

    # -- tables --------------------------------------------------------------

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q

        # digit decomposition of every element, shape (q, m)
        digits = np.zeros((q, m), dtype=np.int64)
        for v in range(q):
            x = v
            for i in range(m):
                digits[v, i] = x % p
                x //= p
        self.digits = digits
        self._pow_p = p ** np.arange(m, dtype=np.int64)

        # addition is digitwise mod p
        summed = (digits[:, None, :] + digits[None, :, :]) % p
        self.add = (summed @ self._pow_p).astype(np.int64)
        self.neg = ((-digits) % p @ self._pow_p).astype(np.int64)
        self.sub = self.add[:, self.neg]

        mul = np.zeros((q, q), dtype=np.int64)
        if m == 1:
            for a in range(q):
                for b in range(a, q):
                    mul[a, b] = mul[b, a] = a * b % p
        else:
            mod = list(self.modulus)
            for a in range(q):
                ca = [int(d) for d in digits[a]]
                for b in range(a, q):
                    cb = [int(d) for d in digits[b]]
                    prod = [0] * (2 * m - 1)
                    for i, ai in enumerate(ca):
                        if ai:
                            for j, bj in enumerate(cb):
                                prod[i + j] = (prod[i + j] + ai * bj) % p
                    rem = _poly_mod(prod, mod, p)
                    mul[a, b] = mul[b, a] = self._encode(rem + [0] * m)
        self.mul = mul

        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.nonzero(mul[a] == 1)[0]
            if hits.size == 0:
                raise ValueError(
                    f"element {a} has no inverse; modulus {self.modulus} is "
                    f"not irreducible"
                )
            inv[a] = hits[0]
        self.inv = inv

    # -- scalar operations ---------------------------------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element of GF({self.q})")
        return int(x)

    def add_elems(self, x: int, y: int) -> int:
        return int(self.add[self.check(x), self.check(y)])

    def sub_elems(self, x: int, y: int) -> int:
        return int(self.sub[self.check(x), self.check(y)])

    def mul_elems(self, x: int, y: int) -> int:
        return int(self.mul[self.check(x), self.check(y)])

    def neg_elem(self, x: int) -> int:
        return int(self.neg[self.check(x)])

    def inv_elem(self, x: int) -> int:
        if self.check(x) == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self.inv[x])

    def pow_elem(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv_elem(x), -e
        acc = 1
        base = self.check(x)
        while e:
            if e & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            e >>= 1
        return acc

    # -- vectorized helpers ----------------------------------------------------

    def sum_reduce(self, values: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum along an axis (addition is digitwise mod p)."""
        values = np.asarray(values, dtype=np.int64)
        dig = self.digits[values]  # appends a digit axis
        ax = axis if axis >= 0 else values.ndim + axis
        total = dig.sum(axis=ax) % self.p
        return (total @ self._pow_p).astype(np.int64)

    # -- identity ----------------------------------------------------------------

    def _key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Field(q={self.q})"
        return f"Field(q={self.q}, modulus={self.modulus})"
