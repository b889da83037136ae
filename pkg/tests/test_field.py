"""GF(q) arithmetic: worked examples, axioms, construction errors."""

import random

import pytest

from sympgv import Field
from sympgv.field import DEFAULT_MODULI, is_irreducible, is_prime


def test_prime_field_examples(gf5):
    # plain modular arithmetic
    assert gf5.add_elems(3, 4) == (3 + 4) % 5 == 2
    assert gf5.mul_elems(3, 4) == (3 * 4) % 5 == 2
    assert gf5.inv_elem(2) == 3 and gf5.mul_elems(2, 3) == 1


def test_gf4_examples(gf4):
    # encoding: 2 <-> x, 3 <-> x + 1, modulus x^2 + x + 1
    assert gf4.add_elems(2, 3) == 1
    assert gf4.mul_elems(2, 3) == 1
    assert gf4.inv_elem(2) == 3


def test_identity_elements(gf2, gf3, gf4, gf5):
    for f in (gf2, gf3, gf4, gf5):
        for x in range(f.q):
            assert f.add_elems(x, 0) == x
            assert f.mul_elems(x, 1) == x


def test_zero_inverse_rejected(gf4, gf5):
    for f in (gf4, gf5):
        with pytest.raises(ZeroDivisionError):
            f.inv_elem(0)


def test_construction_errors():
    with pytest.raises(ValueError):
        Field(4, 1)  # 4 is not prime
    with pytest.raises(ValueError):
        Field(2, 2, modulus=[1, 0, 1])  # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(ValueError):
        Field(2, 2, modulus=[1, 1])  # not degree 2
    with pytest.raises(ValueError):
        Field(11, 2)  # q = 121 has no built-in modulus
    with pytest.raises(ValueError):
        Field(2, 7)  # extension degree above the supported range
    with pytest.raises(ValueError):
        Field.from_order(12)  # not a prime power
    with pytest.raises(ValueError):
        Field.from_order(1)


def test_from_order_matches_direct():
    assert Field.from_order(9) == Field(3, 2)
    assert Field.from_order(7) == Field(7)
    assert Field.from_order(4, [1, 1, 1]) == Field(2, 2)


def test_default_moduli_are_monic_irreducible():
    for q, coeffs in DEFAULT_MODULI.items():
        f = Field.from_order(q)
        assert f.q == q
        assert coeffs[-1] == 1
        assert is_irreducible(coeffs, f.p)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_axioms_exhaustive_small(q):
    f = Field.from_order(q)
    elems = range(q)
    for x in elems:
        assert f.add_elems(x, 0) == x
        assert f.mul_elems(x, 1) == x
        assert f.add_elems(x, f.neg_elem(x)) == 0
        if x:
            assert f.mul_elems(x, f.inv_elem(x)) == 1
        for y in elems:
            assert f.add_elems(x, y) == f.add_elems(y, x)
            assert f.mul_elems(x, y) == f.mul_elems(y, x)
            for z in elems:
                assert f.add_elems(f.add_elems(x, y), z) == f.add_elems(x, f.add_elems(y, z))
                assert f.mul_elems(f.mul_elems(x, y), z) == f.mul_elems(x, f.mul_elems(y, z))
                assert f.mul_elems(x, f.add_elems(y, z)) == \
                    f.add_elems(f.mul_elems(x, y), f.mul_elems(x, z))


@pytest.mark.parametrize("q", [16, 25, 27, 32, 49, 64, 81])
def test_axioms_randomized_larger(q):
    f = Field.from_order(q)
    rng = random.Random(q)
    for _ in range(10_000):
        x, y, z = (rng.randrange(q) for _ in range(3))
        assert f.add_elems(x, y) == f.add_elems(y, x)
        assert f.mul_elems(x, y) == f.mul_elems(y, x)
        assert f.add_elems(f.add_elems(x, y), z) == f.add_elems(x, f.add_elems(y, z))
        assert f.mul_elems(f.mul_elems(x, y), z) == f.mul_elems(x, f.mul_elems(y, z))
        assert f.mul_elems(x, f.add_elems(y, z)) == \
            f.add_elems(f.mul_elems(x, y), f.mul_elems(x, z))
        assert f.add_elems(x, f.neg_elem(x)) == 0
        if x:
            assert f.mul_elems(x, f.inv_elem(x)) == 1


@pytest.mark.parametrize("q", sorted(set(DEFAULT_MODULI) | {2, 3, 5, 7, 11, 13}))
def test_frobenius_fixed_points(q):
    # x^q == x for every element
    f = Field.from_order(q)
    for x in range(q):
        assert f.pow_elem(x, q) == x


def test_negation_identity_iff_char2():
    for q in (2, 4, 8, 16, 3, 5, 9, 25):
        f = Field.from_order(q)
        fixed = all(f.neg_elem(x) == x for x in range(q))
        assert fixed == (f.p == 2)


def test_sum_reduce_matches_scalar(gf4, gf5):
    import numpy as np

    rng = random.Random(7)
    for f in (gf4, gf5):
        vals = np.array([rng.randrange(f.q) for _ in range(13)], dtype=np.int64)
        acc = 0
        for v in vals:
            acc = f.add_elems(acc, int(v))
        assert int(f.sum_reduce(vals)) == acc


def test_is_prime_basics():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
