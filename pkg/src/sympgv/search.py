"""Randomized construction of self-orthogonal codes meeting a distance target.

The existence bounds are counting arguments; this module makes them
constructive.  A trial builds a [2n, k] self-orthogonal code by k extension
steps, each drawing a uniformly random vector of dual(C) \\ C, then checks
the requested minimum distance (of the code itself in ``primal`` mode, of
its symplectic dual in ``dual`` mode).

Per-trial randomness is derived from (seed, trial index) through a fixed
64-bit multiply-xor-shift avalanche, so trials are independent of execution
order and a given config always reproduces the same outcome.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg
from .counting import BoundVerdict, primal_distance_verdict, dual_distance_verdict
from .errors import CapExceededError, InfeasibleError
from .field import Field
from .symplectic import (DEFAULT_CODEWORD_CAP, SympCode, SympVector,
                         code_from_rows, singleton_ok, symp_inner, zero_code)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

PRIMAL_MODE = "primal"
DUAL_MODE = "dual"
_MODES = (PRIMAL_MODE, DUAL_MODE)
_STRATEGIES = ("random", "greedy")

# candidate extensions scored per step by the greedy strategy
_GREEDY_CANDIDATES = 8


def mix64(z: int) -> int:
    """SplitMix64 finalizer: full-avalanche 64-bit mixing."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class TrialStream:
    """Deterministic 64-bit stream keyed by (seed, trial index)."""

    def __init__(self, seed: int, trial: int):
        self._state = mix64(mix64(seed) ^ ((trial * _GOLDEN) & _MASK64))

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), rejection-sampled (no modulo bias)."""
        threshold = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < threshold:
                return x % bound


@dataclass(frozen=True)
class SearchConfig:
    """Target parameters and budget for a witness search.

    ``mode`` selects which distance must reach d: the code's own
    (``primal``) or its symplectic dual's (``dual``).
    """

    field: Field
    n: int
    k: int
    d: int
    trials: int
    seed: int
    strategy: str = "random"
    mode: str = DUAL_MODE

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials={self.trials} must be >= 1")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.d < 1:
            raise ValueError(f"d={self.d} must be >= 1")
        if self.strategy not in _STRATEGIES:
            raise ValueError(f"strategy must be one of {_STRATEGIES}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}")

    @property
    def q(self) -> int:
        return self.field.q


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a witness search.

    When ``found`` is present it is self-orthogonal and ``certified_distance``
    is its exhaustively recomputed distance in the requested mode, >= d.
    Exhausting the trial budget is an outcome, not an error: the existence
    condition failing does not preclude a witness, and holding guarantees one
    only combinatorially.
    """

    found: Optional[SympCode]
    certified_distance: Optional[int]
    trials_used: int
    mode: str
    verdict_context: BoundVerdict


def random_so_code(field: Field, n: int, k: int, stream: TrialStream) -> SympCode:
    """Uniform extension walk: k steps, each adjoining a random vector of
    dual(C) \\ C (drawn from the dual by rejection)."""
    code = zero_code(field, n)
    for _ in range(k):
        code = _extend_random(field, n, code, stream)
    return code


def _extend_random(field: Field, n: int, code: SympCode,
                   stream: TrialStream) -> SympCode:
    dual = code.dual()
    v = _draw_outside(field, code, dual, stream)
    return code_from_rows(field, n, np.vstack([code.generators, v]))


def _draw_outside(field: Field, code: SympCode, dual: SympCode,
                  stream: TrialStream) -> np.ndarray:
    """Uniform vector of dual \\ code; rejection rate q^k / q^{2n-k}."""
    pivots = code.pivots()
    while True:
        coeffs = np.array([stream.below(field.q) for _ in range(dual.k)],
                          dtype=np.int64)
        v = linalg.linear_combination(field, coeffs, dual.generators)
        if not linalg.in_row_space(field, code.generators, pivots, v):
            return v


def _mode_distance(code: SympCode, mode: str, cap: int) -> int:
    target = code if mode == PRIMAL_MODE else code.dual()
    return target.min_weight(cap)


def _greedy_so_code(config: SearchConfig, stream: TrialStream, cap: int) -> SympCode:
    """Best-of-candidates hill climb on the mode distance at every step."""
    field, n = config.field, config.n
    code = zero_code(field, n)
    for step in range(config.k):
        dual = code.dual()
        best_code = None
        best_score = None
        for _ in range(_GREEDY_CANDIDATES):
            v = _draw_outside(field, code, dual, stream)
            cand = code_from_rows(field, n, np.vstack([code.generators, v]))
            score = _greedy_score(cand, config, cap)
            if best_score is None or score > best_score:
                best_code, best_score = cand, score
        code = best_code
    return code


def _greedy_score(cand: SympCode, config: SearchConfig, cap: int) -> tuple:
    """Score candidates: exact mode distance when enumerable, otherwise
    (negated) count of low-weight dual codewords by support enumeration."""
    target = cand if config.mode == PRIMAL_MODE else cand.dual()
    if config.field.q**target.k <= cap:
        return (1, target.min_weight(cap))
    return (0, -count_low_weight_dual(cand, config.d))


def count_low_weight_dual(code: SympCode, d: int) -> int:
    """Exact number of nonzero dual codewords of symplectic weight < d,
    by enumeration of supports of size < d (no full dual scan).

    For a candidate support S the dual vectors supported inside S form a
    subspace cut out by the k orthogonality constraints restricted to S;
    exact-support counts follow by subset subtraction.
    """
    f = code.field
    n, k = code.n, code.k
    g = code.generators
    exact: dict[frozenset, int] = {}

    def subspace_size(support: tuple[int, ...]) -> int:
        cols = []
        for i in support:
            cols.append(g[:, n + i])      # coefficient of v_a[i] in <v, row>
            cols.append(f.neg[g[:, i]])   # coefficient of v_b[i]
        mat = np.column_stack(cols) if cols else np.zeros((k, 0), dtype=np.int64)
        reduced, _ = linalg.rref(f, mat)
        return f.q ** (2 * len(support) - reduced.shape[0])

    total = 0
    for size in range(1, min(d - 1, n) + 1):
        for support in itertools.combinations(range(n), size):
            count = subspace_size(support) - 1
            for smaller in exact:
                if smaller < frozenset(support):
                    count -= exact[smaller]
            exact[frozenset(support)] = count
            total += count
    return total


def search_witness(config: SearchConfig, *,
                   codeword_cap: int = DEFAULT_CODEWORD_CAP) -> SearchOutcome:
    """Run up to ``config.trials`` independent trials; stop at the first code
    whose mode distance reaches d.

    Raises :class:`InfeasibleError` when a primal target violates the
    symplectic Singleton bound, and :class:`CapExceededError` when the
    required exhaustive distance check would exceed ``codeword_cap``.
    """
    field, n, k, d = config.field, config.n, config.k, config.d
    if config.mode == PRIMAL_MODE:
        if not singleton_ok(n, k, d):
            raise InfeasibleError(
                f"[{2 * n},{k},{d}] violates the symplectic Singleton bound "
                f"k + 2d <= 2n + 2"
            )
        verdict = primal_distance_verdict(field.q, n, k, d)
        enum_dim = k
    else:
        verdict = dual_distance_verdict(field.q, n, k, d)
        enum_dim = 2 * n - k
    if field.q**enum_dim > codeword_cap:
        raise CapExceededError(
            f"distance check needs {field.q}^{enum_dim} codewords, "
            f"above the cap {codeword_cap}"
        )

    for trial in range(config.trials):
        stream = TrialStream(config.seed, trial)
        if config.strategy == "greedy":
            code = _greedy_so_code(config, stream, codeword_cap)
        else:
            code = random_so_code(field, n, k, stream)
        dist = _mode_distance(code, config.mode, codeword_cap)
        if dist >= d:
            return SearchOutcome(found=code, certified_distance=dist,
                                 trials_used=trial + 1, mode=config.mode,
                                 verdict_context=verdict)
    return SearchOutcome(found=None, certified_distance=None,
                         trials_used=config.trials, mode=config.mode,
                         verdict_context=verdict)


# ---------------------------------------------------------------------------
# independent certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """From-scratch validation of a claimed distance.

    The distance is recomputed by a plain-python codeword walk that shares no
    code with the scan kernels, and the reported witness codeword is an
    upper-bound certificate anyone can re-check by hand.
    """

    ok: bool
    mode: str
    target_distance: int
    self_orthogonal: bool
    computed_distance: int
    witness: SympVector

    def text(self) -> str:
        lines = [
            f"mode={self.mode} target_d={self.target_distance}",
            f"self_orthogonal={'true' if self.self_orthogonal else 'false'}",
            f"computed_distance={self.computed_distance}",
            f"min_weight_witness={self.witness.render()}",
            f"certified={'true' if self.ok else 'false'}",
        ]
        return "\n".join(lines)


def _plain_min_weight(code: SympCode, cap: int) -> tuple[int, SympVector]:
    """Independent exhaustive minimum weight (no shared kernel, no cache)."""
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if code.field.q**code.k > cap:
        raise CapExceededError(
            f"certification would enumerate {code.field.q}^{code.k} codewords, "
            f"above the cap {cap}"
        )
    best = code.n + 1
    witness = None
    for _, word in code.codewords():
        w = word.weight()
        if w < best:
            best = w
            witness = word
            if best == 1:
                break
    return best, witness


def certify(code: SympCode, d: int, mode: str = DUAL_MODE, *,
            codeword_cap: int = DEFAULT_CODEWORD_CAP) -> Certificate:
    """Recompute self-orthogonality and the selected minimum distance from
    scratch and compare against the claimed d."""
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
    if d < 1:
        raise ValueError(f"d={d} must be >= 1")
    rows = code.rows()
    so = all(symp_inner(rows[i], rows[j]) == 0
             for i in range(len(rows)) for j in range(i + 1, len(rows)))
    target = code if mode == PRIMAL_MODE else code.dual()
    dist, witness = _plain_min_weight(target, codeword_cap)
    return Certificate(ok=so and dist >= d, mode=mode, target_distance=d,
                       self_orthogonal=so, computed_distance=dist,
                       witness=witness)
