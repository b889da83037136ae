"""Both kernel backends must produce bit-identical results."""

import random

import numpy as np
import pytest

from sympgv import Field
from sympgv.kernels import (_min_weight_loops, _min_weight_numpy, _rref_loops,
                            _rref_numpy, backend_name, min_weight_scan,
                            rref_in_place)


def _random_matrix(rng, q, rows, cols):
    return np.array([[rng.randrange(q) for _ in range(cols)] for _ in range(rows)],
                    dtype=np.int64)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_rref_backends_agree(q):
    f = Field.from_order(q)
    rng = random.Random(100 + q)
    for _ in range(40):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(rows, 9)
        mat = _random_matrix(rng, q, rows, cols)
        m1, m2 = mat.copy(), mat.copy()
        r1, p1 = _rref_loops(m1, f.add, f.mul, f.neg, f.inv)
        r2, p2 = _rref_numpy(m2, f.add, f.mul, f.neg, f.inv)
        assert r1 == r2
        assert np.array_equal(p1[:r1], p2[:r2])
        assert np.array_equal(m1, m2)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_min_weight_backends_agree(q):
    f = Field.from_order(q)
    rng = random.Random(200 + q)
    for _ in range(25):
        n = rng.randrange(2, 5)
        k = rng.randrange(1, min(n, 3) + 1)
        mat = _random_matrix(rng, q, k, 2 * n)
        work = mat.copy()
        rank, _ = _rref_loops(work, f.add, f.mul, f.neg, f.inv)
        if rank == 0:
            continue
        rows = work[:rank]
        limit = q**rank
        out1 = _min_weight_loops(rows, n, f.add, f.sub, f.mul, limit)
        out2 = _min_weight_numpy(rows, n, f.add, f.sub, f.mul, limit)
        assert (int(out1[0]), int(out1[1])) == (int(out2[0]), int(out2[1]))


def test_active_backend_matches_reference(gf3):
    rng = random.Random(5)
    mat = _random_matrix(rng, 3, 3, 8)
    via_kernel = mat.copy()
    rank, pivots = rref_in_place(via_kernel, gf3.add, gf3.mul, gf3.neg, gf3.inv)
    ref = mat.copy()
    ref_rank, ref_piv = _rref_loops(ref, gf3.add, gf3.mul, gf3.neg, gf3.inv)
    assert rank == ref_rank
    assert np.array_equal(pivots, ref_piv[:ref_rank])
    assert np.array_equal(via_kernel, ref)

    rows = ref[:rank]
    got = min_weight_scan(rows, 4, gf3.add, gf3.sub, gf3.mul, 3**rank)
    want = _min_weight_loops(rows, 4, gf3.add, gf3.sub, gf3.mul, 3**rank)
    assert got == (int(want[0]), int(want[1]))


def test_backend_name_valid():
    assert backend_name() in ("numba", "numpy")


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_min_weight_matches_itertools_oracle(q):
    # the scan kernel against a from-scratch full enumeration
    from sympgv import random_so_code
    from sympgv.search import TrialStream

    from oracles import field_min_weight

    field = Field.from_order(q)
    for trial in range(8):
        code = random_so_code(field, 3, 1 + trial % 3, TrialStream(42, trial))
        got, _ = min_weight_scan(code.generators, code.n, field.add, field.sub,
                                 field.mul, q**code.k)
        assert got == field_min_weight(code)


def test_min_weight_limit_guard(gf2):
    with pytest.raises(ValueError):
        min_weight_scan(np.eye(4, dtype=np.int64)[:1], 2,
                        gf2.add, gf2.sub, gf2.mul, (1 << 62) + 1)


def test_min_weight_rejects_empty(gf2):
    with pytest.raises(ValueError):
        min_weight_scan(np.zeros((0, 4), dtype=np.int64), 2,
                        gf2.add, gf2.sub, gf2.mul, 1)
