import random

import pytest

from propnet.exactla import (DimensionMismatch, Mat, Subspace, kernel,
                             rank, rref, solve, subspace_eq)
from propnet.scalar import QQ, QS

from helpers import rand_rows, rand_scalar


def test_rref_idempotent_and_pivots():
    rng = random.Random(10)
    for field in (QQ, QS):
        for _ in range(40):
            rows = rand_rows(rng, field, rng.randint(1, 4), rng.randint(1, 5))
            red, pivots = rref(rows, field)
            red2, pivots2 = rref(red, field)
            assert red == red2 and pivots == pivots2
            for r, c in enumerate(pivots):
                assert red[r][c] == field.one
                for r2 in range(len(red)):
                    if r2 != r:
                        assert red[r2][c] == field.zero


def test_rank_nullity():
    rng = random.Random(11)
    for field in (QQ, QS):
        for _ in range(40):
            nr, nc = rng.randint(1, 4), rng.randint(1, 5)
            m = Mat.from_rows(field, rand_rows(rng, field, nr, nc))
            assert rank(m) + kernel(m).dim == nc


def test_kernel_vectors_annihilate():
    rng = random.Random(12)
    for field in (QQ, QS):
        for _ in range(30):
            m = Mat.from_rows(field,
                              rand_rows(rng, field, rng.randint(1, 3),
                                        rng.randint(1, 4)))
            for v in kernel(m).basis:
                assert all(x == field.zero for x in m.mul_vec(v))


def test_subspace_canonical_equality():
    a = Subspace(QQ, 3, [[1, 0, 1], [0, 1, 1]])
    b = Subspace(QQ, 3, [[1, 1, 2], [1, -1, 0]])
    assert a == b and hash(a) == hash(b)
    c = Subspace(QQ, 3, [[1, 0, 0]])
    assert a != c
    with pytest.raises(ValueError):
        subspace_eq(a, Subspace(QQ, 2, [[1, 0]]))


def test_annihilator_duality():
    rng = random.Random(13)
    for field in (QQ, QS):
        for _ in range(30):
            amb = rng.randint(1, 5)
            vecs = rand_rows(rng, field, rng.randint(0, amb), amb)
            sp = Subspace(field, amb, vecs)
            ann = sp.annihilator()
            assert sp.dim + ann.dim == amb
            for v in sp.basis:
                for w in ann.basis:
                    dot = sum((x * y for x, y in zip(v, w)), field.zero)
                    assert dot == field.zero
            assert ann.annihilator() == sp


def test_solve():
    m = Mat.from_rows(QQ, [[QQ.coerce(1), QQ.coerce(2)],
                           [QQ.coerce(3), QQ.coerce(4)]])
    x = solve(m, [QQ.coerce(5), QQ.coerce(11)])
    assert m.mul_vec(x) == [QQ.coerce(5), QQ.coerce(11)]
    singular = Mat.from_rows(QQ, [[QQ.coerce(1), QQ.coerce(1)],
                                  [QQ.coerce(1), QQ.coerce(1)]])
    assert solve(singular, [QQ.coerce(0), QQ.coerce(1)]) is None


def test_matmul_and_dimension_checks():
    a = Mat.from_rows(QQ, [[QQ.coerce(1), QQ.coerce(2)]])
    b = Mat.from_rows(QQ, [[QQ.coerce(3)], [QQ.coerce(4)]])
    assert (a @ b).row_list() == [[QQ.coerce(11)]]
    with pytest.raises(DimensionMismatch):
        b @ b


def test_over_qs_entries():
    rng = random.Random(14)
    s = QS.parse("s")
    m = Mat.from_rows(QS, [[s, QS.one], [s * s, s]])
    assert rank(m) == 1
    k = kernel(m)
    assert k.dim == 1
    v = k.basis[0]
    assert s * v[0] + v[1] == QS.zero
    for _ in range(10):
        x = rand_scalar(rng, QS)
        assert QS.coerce(x) == x
