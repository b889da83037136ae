"""From symplectic self-orthogonal codes to quantum stabilizer parameters,
plus the asymptotic rate bound with the q-ary entropy function.

A self-orthogonal [2n, k] code over GF(q) induces a q-ary [[n, n-k, d]]
stabilizer code whose distance is the symplectic distance of the dual; each
generator row (a | b) reads as a generalized Pauli operator applying X^a_i
Z^b_i on qudit i.

Existence verdicts stay exact-rational; the entropy / rate / root-finding
helpers are double precision (they feed plots and asymptotic comparisons,
never an existence decision).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .counting import BoundVerdict, quantum_distance_verdict
from .field import Field
from .symplectic import DEFAULT_CODEWORD_CAP, SympCode


@dataclass(frozen=True)
class QuantumParams:
    """Stabilizer-code parameter triple [[n, logical, d]] over a q-ary alphabet.

    ``logical`` is n - k for a source code of dimension k; the code space has
    q^logical dimensions.
    """

    n: int
    logical: int
    d: int
    q: int

    def render(self) -> str:
        return f"[[{self.n},{self.logical},{self.d}]]_{self.q}"


def to_quantum_params(code: SympCode,
                      cap: int = DEFAULT_CODEWORD_CAP) -> QuantumParams:
    """Parameters of the stabilizer code induced by a self-orthogonal code.

    The distance is the exhaustively computed minimum symplectic weight of
    the dual.
    """
    if not code.is_self_orthogonal():
        raise ValueError("code is not symplectic self-orthogonal")
    d = code.dual().min_weight(cap)
    return QuantumParams(n=code.n, logical=code.n - code.k, d=d, q=code.q)


# ---------------------------------------------------------------------------
# generalized Pauli labels
# ---------------------------------------------------------------------------

_PAULI_2 = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_PAULI_2_INV = {v: k for k, v in _PAULI_2.items()}


def pauli_label(field: Field, vec: np.ndarray) -> str:
    """Operator label of one row (a | b).

    q = 2 uses the single-letter alphabet I/X/Z/Y with no separator; q > 2
    renders each qudit as X<a>Z<b> (I when both vanish) joined by middle dots,
    leaving phase conventions out of the picture.
    """
    vec = np.asarray(vec, dtype=np.int64)
    n = vec.size // 2
    if field.q == 2:
        return "".join(_PAULI_2[(int(vec[i]), int(vec[n + i]))] for i in range(n))
    parts = []
    for i in range(n):
        a, b = int(vec[i]), int(vec[n + i])
        if a == 0 and b == 0:
            parts.append("I")
        elif b == 0:
            parts.append(f"X{a}")
        elif a == 0:
            parts.append(f"Z{b}")
        else:
            parts.append(f"X{a}Z{b}")
    return "·".join(parts)


def parse_pauli_label(field: Field, label: str, n: int) -> np.ndarray:
    """Inverse of :func:`pauli_label`; returns the flat (a | b) array."""
    vec = np.zeros(2 * n, dtype=np.int64)
    if field.q == 2:
        if len(label) != n:
            raise ValueError(f"label {label!r} has {len(label)} symbols, expected {n}")
        for i, ch in enumerate(label):
            if ch not in _PAULI_2_INV:
                raise ValueError(f"unknown Pauli symbol {ch!r}")
            vec[i], vec[n + i] = _PAULI_2_INV[ch]
        return vec
    parts = label.split("·")
    if len(parts) != n:
        raise ValueError(f"label has {len(parts)} qudit factors, expected {n}")
    for i, part in enumerate(parts):
        a = b = 0
        rest = part
        if rest == "I":
            rest = ""
        if rest.startswith("X"):
            rest = rest[1:]
            j = 0
            while j < len(rest) and rest[j].isdigit():
                j += 1
            a = int(rest[:j])
            rest = rest[j:]
        if rest.startswith("Z"):
            b = int(rest[1:])
            rest = ""
        if rest:
            raise ValueError(f"cannot parse qudit factor {part!r}")
        vec[i], vec[n + i] = field.check(a), field.check(b)
    return vec


def stabilizer_labels(code: SympCode) -> list[str]:
    """One operator label per generator row of a self-orthogonal code."""
    if not code.is_self_orthogonal():
        raise ValueError("code is not symplectic self-orthogonal")
    return [pauli_label(code.field, row) for row in code.generators]


# ---------------------------------------------------------------------------
# asymptotics
# ---------------------------------------------------------------------------

def q_ary_entropy(q: int, x: float) -> float:
    """H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x).

    Endpoints by the 0 log 0 = 0 convention: H_q(0) = 0 and
    H_q(1) = log_q(q-1).
    """
    if q < 2:
        raise ValueError(f"q={q} must be >= 2")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    logq = math.log(q)
    ent = 0.0
    if x > 0.0:
        ent += x * math.log(q - 1) / logq if q > 2 else 0.0
        ent -= x * math.log(x) / logq
    if x < 1.0:
        ent -= (1.0 - x) * math.log(1.0 - x) / logq
    return ent


@dataclass(frozen=True)
class AsymptoticPoint:
    """One point of the asymptotic lower bound on the rate-vs-distance curve."""

    delta: float
    rate: float


def asymptotic_rate(q: int, delta: float) -> AsymptoticPoint:
    """Asymptotic achievable-rate lower bound 1 - delta log_q(q+1) - H_q(delta).

    May be negative (the bound is vacuous there); callers clamp if desired.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta={delta} outside [0, 1]")
    rate = 1.0 - delta * math.log(q + 1) / math.log(q) - q_ary_entropy(q, delta)
    return AsymptoticPoint(delta=delta, rate=rate)


def delta_zero(q: int, tol: float = 1e-9) -> float:
    """Zero crossing of the asymptotic rate bound on (0, (q-1)/q).

    The bound decreases strictly from 1 to a negative value on that interval,
    so bisection to absolute tolerance ``tol`` is well-posed.
    """
    if q < 2:
        raise ValueError(f"q={q} must be >= 2")
    lo, hi = 0.0, (q - 1) / q
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if asymptotic_rate(q, mid).rate > 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


@dataclass(frozen=True)
class FiniteRatePoint:
    """Best guaranteed finite-length point at relative distance ~ delta."""

    n: int
    k: int
    d: int
    rate: float


def finite_rate_point(q: int, n: int, delta: float) -> Optional[FiniteRatePoint]:
    """Finite-length counterpart of the asymptotic bound.

    Sets d = floor(delta * n) and scans for the minimal k >= 1 whose quantum
    existence condition holds (the right-hand side grows with k, so the first
    hit is minimal); the achieved rate is (n - k)/n.  Returns None when no
    k <= n satisfies the condition.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta={delta} outside (0, 1)")
    if n < 1.0 / delta:
        raise ValueError(f"need n >= 1/delta, got n={n}, delta={delta}")
    d = math.floor(delta * n)
    for k in range(1, n + 1):
        if quantum_distance_verdict(q, n, k, d).holds:
            return FiniteRatePoint(n=n, k=k, d=d, rate=(n - k) / n)
    return None


def quantum_existence_verdict(q: int, n: int, k: int, d: int) -> BoundVerdict:
    """Re-export of the quantum existence condition for API symmetry."""
    return quantum_distance_verdict(q, n, k, d)
