"""Echelon forms, rank, span queries, seeded randomness, and subspace enumeration."""

import itertools
import random

import numpy as np
import pytest

from gencover.errors import DimensionMismatch
from gencover.fqlinalg import (
    GFMatrix,
    PackedSpace,
    gaussian_binomial,
    in_span,
    iter_rref_bases,
    matvec,
    random_matrix,
    rank,
    rref,
)
from gencover.gf import field_create

F2 = field_create(2, 1)
F3 = field_create(3, 1)
F4 = field_create(2, 2)


def test_rref_identity_and_zero():
    ident = GFMatrix.identity(F2, 3)
    res = rref(ident)
    assert res.rref == ident
    assert res.rank == 3
    zero = GFMatrix.zeros(F3, 2, 4)
    assert rref(zero).rref == zero
    assert rref(zero).rank == 0


def test_rref_hand_example():
    m = GFMatrix.from_rows(F2, [[1, 1], [1, 1]])
    res = rref(m)
    assert res.rref == GFMatrix.from_rows(F2, [[1, 1], [0, 0]])
    assert res.rank == 1
    assert res.pivot_cols == (0,)


def test_rank_examples():
    assert rank(GFMatrix.identity(F3, 3)) == 3
    assert rank(GFMatrix.zeros(F2, 3, 3)) == 0
    # Third row is the sum of the first two.
    assert rank(GFMatrix.from_rows(F2, [[1, 0], [0, 1], [1, 1]])) == 2


def test_rank_transpose_invariance_random():
    rng = random.Random(7)
    for field in (F2, F3, F4):
        for trial in range(40):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            m = random_matrix(r, c, field, seed=trial + 100 * field.q)
            assert rank(m) == rank(m.transpose())


def test_rref_idempotent_random():
    for field in (F2, F3):
        for trial in range(40):
            m = random_matrix(4, 5, field, seed=31 * trial + field.q)
            once = rref(m).rref
            assert rref(once).rref == once


def test_in_span_empty_basis():
    empty = GFMatrix(F2, 3, 0, [])
    assert in_span(empty, (0, 0, 0)) == ()
    assert in_span(empty, (0, 1, 0)) is None


def test_in_span_hand_example():
    # Columns (1,0) and (1,1); target (0,1) = their sum.
    basis = GFMatrix.from_rows(F2, [[1, 1], [0, 1]])
    assert in_span(basis, (0, 1)) == (1, 1)
    assert in_span(basis, (1, 1)) == (0, 1)
    with pytest.raises(DimensionMismatch):
        in_span(basis, (1, 0, 0))


def test_in_span_reproduces_target_random():
    rng = random.Random(11)
    for field in (F2, F3, F4):
        for trial in range(60):
            rows = rng.randint(1, 5)
            cols = rng.randint(0, 5)
            basis = random_matrix(rows, cols, field, seed=trial * 13 + field.q)
            target = tuple(rng.randrange(field.q) for _ in range(rows))
            coeffs = in_span(basis, target)
            if coeffs is not None:
                assert matvec(basis, coeffs) == target
            else:
                # Unsolvable must mean the augmented system has larger rank.
                aug = basis.hstack(GFMatrix(field, rows, 1, list(target)))
                assert rank(aug) == rank(basis) + 1


def test_matmul_matches_naive():
    rng = random.Random(5)
    for field in (F2, F3, F4):
        a = random_matrix(3, 4, field, seed=field.q)
        b = random_matrix(4, 2, field, seed=field.q + 1)
        prod = a @ b
        for i in range(3):
            for j in range(2):
                acc = 0
                for k in range(4):
                    acc = field.add(acc, field.mul(a.at(i, k), b.at(k, j)))
                assert prod.at(i, j) == acc
    del rng


def test_random_matrix_determinism_and_seed_sensitivity():
    a = random_matrix(4, 4, F2, seed=12345)
    b = random_matrix(4, 4, F2, seed=12345)
    assert a == b
    # Frozen seed pair: verified once to differ, kept as a regression.
    assert random_matrix(4, 4, F2, seed=12345) != random_matrix(4, 4, F2, seed=12346)
    empty = random_matrix(0, 5, F3, seed=1)
    assert empty.rows == 0 and empty.cols == 5


def test_iter_rref_bases_counts_and_uniqueness():
    for field, m, k in [(F2, 4, 2), (F2, 5, 2), (F3, 3, 2), (F2, 4, 1), (F3, 4, 3)]:
        bases = list(iter_rref_bases(m, k, field))
        assert len(bases) == gaussian_binomial(m, k, field.q)
        assert len(set(bases)) == len(bases)
        for b in bases:
            assert rank(b) == k
            assert rref(b).rref == b  # already canonical


def test_iter_rref_bases_covers_all_subspaces_f2():
    # Oracle: enumerate all 2-subsets of nonzero vectors of F_2^3, record the
    # distinct spans, and compare against the canonical enumeration.
    spans = set()
    vecs = list(itertools.product(range(2), repeat=3))[1:]
    for a, b in itertools.combinations(vecs, 2):
        m = GFMatrix.from_rows(F2, [list(a), list(b)])
        if rank(m) == 2:
            spans.add(rref(m).rref)
    canonical = {b for b in iter_rref_bases(3, 2, F2)}
    assert spans == canonical


def pack_reference(digits, p):
    return sum(d * p**i for i, d in enumerate(digits))


@pytest.mark.parametrize("p,d", [(2, 6), (3, 5), (5, 3)])
def test_packed_space_adders(p, d):
    space = PackedSpace(p, d)
    rng = random.Random(p * 100 + d)
    arr = np.array([rng.randrange(space.size) for _ in range(200)], dtype=np.int64)
    for _ in range(10):
        delta = rng.randrange(space.size)
        add = space.adder(delta)
        got = add(arr)
        dd = space.unpack(delta)
        for x, g in zip(arr.tolist(), got.tolist()):
            expect = pack_reference(
                [(a + b) % p for a, b in zip(space.unpack(x), dd)], p
            )
            assert g == expect
        sub = space.subtractor_from(delta)
        got = sub(arr)
        for x, g in zip(arr.tolist(), got.tolist()):
            expect = pack_reference(
                [(b - a) % p for a, b in zip(space.unpack(x), dd)], p
            )
            assert g == expect


def test_packed_space_roundtrip():
    space = PackedSpace(3, 4)
    for idx in range(space.size):
        assert space.pack(space.unpack(idx)) == idx
