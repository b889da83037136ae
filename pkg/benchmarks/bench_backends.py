"""Benchmark the jitted kernels against the pure-numpy fallback.

Runs the two hot kernels (exhaustive codeword weight scan, RREF
canonicalization) on identical inputs through both implementations and
prints a timing table.  JIT compilation is triggered once before timing.

Usage:  python benchmarks/bench_backends.py
"""

from __future__ import annotations

import random
import time

import numpy as np
from numba import njit

from sympgv import Field, random_so_code
from sympgv.kernels import (_min_weight_loops, _min_weight_numpy, _rref_loops,
                            _rref_numpy)
from sympgv.search import TrialStream

_mw_numba = njit(cache=True)(_min_weight_loops)
_rref_numba = njit(cache=True)(_rref_loops)


def _time(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_min_weight():
    cases = [(2, 20, 18), (2, 24, 21), (3, 12, 11), (5, 8, 7)]
    rows = []
    for q, n, k in cases:
        field = Field.from_order(q)
        code = random_so_code(field, n, k, TrialStream(1, 0))
        gens = code.generators.copy()
        limit = q**k
        args = (gens, n, field.add, field.sub, field.mul, limit)
        _mw_numba(*args)  # compile before timing
        t_nb, out_nb = _time(_mw_numba, *args)
        t_np, out_np = _time(_min_weight_numpy, *args, repeat=1)
        assert (int(out_nb[0]), int(out_nb[1])) == (int(out_np[0]), int(out_np[1]))
        rows.append((f"min-weight scan q={q} k={k} ({limit:,} words)",
                     t_nb, t_np))
    return rows


def bench_rref():
    reps = 20_000
    rng = random.Random(3)
    field = Field(3)
    mats = [np.array([[rng.randrange(3) for _ in range(12)] for _ in range(6)],
                     dtype=np.int64) for _ in range(reps)]

    def run(kernel):
        total_rank = 0
        for mat in mats:
            work = mat.copy()
            rank, _ = kernel(work, field.add, field.mul, field.neg, field.inv)
            total_rank += int(rank)
        return total_rank

    _rref_numba(mats[0].copy(), field.add, field.mul, field.neg, field.inv)
    t_nb, out_nb = _time(run, _rref_numba, repeat=1)
    t_np, out_np = _time(run, _rref_numpy, repeat=1)
    assert out_nb == out_np
    return [(f"rref canonicalization ({reps:,} matrices 6x12, q=3)", t_nb, t_np)]


def main():
    t0 = time.perf_counter()
    _mw_numba(np.eye(2, dtype=np.int64).reshape(1, -1)[:, :4].copy(), 2,
              Field(2).add, Field(2).sub, Field(2).mul, 2)
    compile_s = time.perf_counter() - t0

    rows = bench_min_weight() + bench_rref()
    width = max(len(name) for name, _, _ in rows)
    print(f"(one-time JIT compile/load: {compile_s:.2f}s)\n")
    print(f"{'kernel':<{width}}  {'numba':>9}  {'numpy':>9}  {'speedup':>8}")
    for name, t_nb, t_np in rows:
        print(f"{name:<{width}}  {t_nb * 1e3:>8.1f}ms  {t_np * 1e3:>8.1f}ms  "
              f"{t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
