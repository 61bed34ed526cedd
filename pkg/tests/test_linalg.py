import itertools
import random

import pytest

from cdcodes.gf import GF, field_of_order
from cdcodes.linalg import (
    MatrixGF,
    _rref_generic,
    decode_vector,
    encode_vector,
    enumerate_subspaces,
    intersection_dim,
    kernel_dim,
    rank,
    rref,
    subspace_distance,
    subspace_from_rows,
)

F2 = GF(2)
F3 = GF(3)


def all_matrices(field, nrows, ncols):
    q = field.order
    for flat in itertools.product(range(q), repeat=nrows * ncols):
        yield MatrixGF(field, [flat[i * ncols:(i + 1) * ncols] for i in range(nrows)])


def test_rref_identity_and_zero():
    ident = MatrixGF.identity(F2, 3)
    assert rref(ident) == ident
    z = MatrixGF.zeros(F3, 2, 4)
    assert rref(z) == z


def test_rref_hand_example():
    m = MatrixGF(F2, [[1, 1], [1, 0]])
    assert rref(m).rows == ((1, 0), (0, 1))


def test_rank_counts_f2_2x2():
    ranks = [rank(m) for m in all_matrices(F2, 2, 2)]
    assert ranks.count(0) == 1
    assert ranks.count(1) == 9
    assert ranks.count(2) == 6


def test_rank_rank_nullity():
    assert rank(MatrixGF.identity(F3, 4)) == 4
    assert kernel_dim(MatrixGF.identity(F3, 4)) == 0
    assert kernel_dim(MatrixGF.zeros(F2, 5, 5)) == 5
    for m in all_matrices(F3, 2, 2):
        assert kernel_dim(m) + rank(m) == 2


def test_packed_matches_generic_rref():
    rng = random.Random(7)
    for _ in range(200):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 8)
        rows = [[rng.randint(0, 1) for _ in range(ncols)] for _ in range(nrows)]
        m = MatrixGF(F2, rows)
        generic_rows, generic_rank, _ = _rref_generic(F2, rows, ncols)
        assert m.rref().rows == tuple(generic_rows)
        assert m.rank() == generic_rank


def test_rank_invariant_under_permutations():
    rng = random.Random(11)
    for field in (F2, F3):
        for _ in range(50):
            rows = [[rng.randrange(field.order) for _ in range(4)] for _ in range(3)]
            m = MatrixGF(field, rows)
            rp = list(range(3))
            cp = list(range(4))
            rng.shuffle(rp)
            rng.shuffle(cp)
            permuted = MatrixGF(field, [[rows[i][j] for j in cp] for i in rp])
            assert m.rank() == permuted.rank()


def test_matmul_against_direct():
    a = MatrixGF(F3, [[1, 2], [0, 1]])
    b = MatrixGF(F3, [[2, 1], [1, 1]])
    c = a @ b
    assert c.rows == ((1, 0), (1, 1))  # entries mod 3
    ident = MatrixGF.identity(F3, 2)
    assert (a @ ident) == a


def test_subspace_canonical_and_equality():
    m1 = MatrixGF(F2, [[1, 0, 1, 0], [0, 1, 0, 1]])
    m2 = MatrixGF(F2, [[1, 1, 1, 1], [0, 1, 0, 1]])  # row-equivalent
    s1 = subspace_from_rows(m1)
    s2 = subspace_from_rows(m2)
    assert s1 == s2
    assert hash(s1) == hash(s2)
    assert s1.dim == 2 and s1.ambient_dim == 4


def test_subspace_rank_drop_recorded():
    m = MatrixGF(F2, [[1, 0, 1], [1, 0, 1]])
    s = subspace_from_rows(m)
    assert s.dim == 1


def test_intersection_and_distance_examples():
    u = subspace_from_rows(MatrixGF(F2, [[1, 0, 0, 0], [0, 1, 0, 0]]))
    v = subspace_from_rows(MatrixGF(F2, [[0, 0, 1, 0], [0, 0, 0, 1]]))
    assert intersection_dim(u, v) == 0
    assert subspace_distance(u, v) == 4
    assert intersection_dim(u, u) == 2
    assert subspace_distance(u, u) == 0
    w = subspace_from_rows(MatrixGF(F2, [[1, 0, 0, 0], [0, 0, 1, 0]]))
    assert intersection_dim(u, w) == 1
    assert subspace_distance(u, w) == 2
    tall = subspace_from_rows(MatrixGF(F2, [[1, 0]]))
    with pytest.raises(ValueError):
        intersection_dim(u, tall)


def test_intersection_dim_matches_vector_count_oracle():
    rng = random.Random(3)
    for field in (F2, F3):
        q = field.order
        for _ in range(40):
            rows_u = [[rng.randrange(q) for _ in range(4)] for _ in range(2)]
            rows_v = [[rng.randrange(q) for _ in range(4)] for _ in range(2)]
            u = subspace_from_rows(MatrixGF(field, rows_u))
            v = subspace_from_rows(MatrixGF(field, rows_v))
            common = set(u.vectors()) & set(v.vectors())
            count = len(common)
            d = intersection_dim(u, v)
            assert count == q ** d


def test_metric_axioms_random_triples():
    spaces = list(enumerate_subspaces(F2, 4, 2))
    rng = random.Random(5)
    for _ in range(200):
        u, v, w = (rng.choice(spaces) for _ in range(3))
        duv = subspace_distance(u, v)
        assert duv == subspace_distance(v, u)
        assert (duv == 0) == (u == v)
        assert duv <= subspace_distance(u, w) + subspace_distance(w, v)


def test_enumerate_subspaces_counts():
    assert len(list(enumerate_subspaces(F2, 4, 2))) == 35
    assert len(list(enumerate_subspaces(F3, 3, 1))) == 13
    assert len(list(enumerate_subspaces(F2, 4, 0))) == 1
    # all distinct and correctly sized
    seen = set(enumerate_subspaces(F2, 5, 2))
    assert len(seen) == 155


def test_vector_encoding_roundtrip():
    for q in (2, 3, 4):
        field = field_of_order(q)
        for coords in itertools.product(range(q), repeat=3):
            code = encode_vector(coords, q)
            assert decode_vector(code, q, 3) == coords
        s = subspace_from_rows(MatrixGF(field, [[1, 0, 2 % q], [0, 1, 1]]))
        vecs = s.vectors()
        assert len(vecs) == q ** 2
        assert len(set(vecs)) == q ** 2
        assert 0 in vecs
