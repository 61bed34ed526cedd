import itertools

import pytest

from cdcodes.construct import (
    BlockGenerator,
    CodeSet,
    ConstructionError,
    grassmannian_code,
    intersection_bound_pairwise,
    lifted_mrd_code,
    linkage,
    multiblock_generators,
    multiblock_parallel_mrd,
    parallel_linkage,
    rect_lifted_mrd_code,
)
from cdcodes.gf import field_of_order
from cdcodes.linalg import MatrixGF, intersection_dim, subspace_distance
from cdcodes.qpoly import BudgetError, enumerate_mrd
from cdcodes.bounds import bound_multiblock


def exhaustive_min_distance(code):
    return min(
        subspace_distance(u, v) for u, v in itertools.combinations(code.members, 2)
    )


def test_lifted_221():
    code = lifted_mrd_code(2, 2, 1)
    assert len(code) == 16
    assert code.ambient_dim == 4 and code.dim == 2
    assert exhaustive_min_distance(code) == 2
    assert code.claimed_distance == 2


def test_lifted_members_distinct_per_matrix():
    # distinct MRD matrices give distinct lifted subspaces
    code = lifted_mrd_code(2, 3, 1)
    assert len(code) == 64
    assert len(set(code.members)) == 64


def test_lifted_intersection_bound_against_rank():
    # dim(U_A cap U_B) <= n - rank(A - B), exhaustively on the smallest code
    from cdcodes.linalg import subspace_from_rows

    field = field_of_order(2)
    ident = MatrixGF.identity(field, 2)
    mats = [f.to_matrix() for f in enumerate_mrd(2, 2, 1)]
    spaces = [subspace_from_rows(ident.hstack(m)) for m in mats]
    for (ma, ua), (mb, ub) in itertools.combinations(zip(mats, spaces), 2):
        assert intersection_dim(ua, ub) <= 2 - ma.sub(mb).rank()


def test_lifted_242_exhaustive_distance():
    code = lifted_mrd_code(2, 4, 2)
    assert len(code) == 4096
    assert code.claimed_distance == 4
    from cdcodes.verify import min_distance_exhaustive

    dist, _ = min_distance_exhaustive(code)
    assert dist == 4


def test_budget_errors():
    with pytest.raises(BudgetError):
        lifted_mrd_code(2, 4, 2, budget=100)
    with pytest.raises(BudgetError):
        multiblock_parallel_mrd(2, 4, 2, 1, budget=4000)


def test_grassmannian_code():
    code = grassmannian_code(2, 4, 2)
    assert len(code) == 35
    assert code.claimed_distance == 2


def test_rect_lifted_code():
    # h = 0 collapses to the square lifted code
    square = lifted_mrd_code(2, 2, 1)
    rect0 = rect_lifted_mrd_code(2, 2, 0, 1)
    assert set(rect0.members) == set(square.members)
    # h = 1: 2-dim subspaces of F_2^5, one per rectangular codeword
    rect1 = rect_lifted_mrd_code(2, 2, 1, 1)
    assert len(rect1) == 2 ** (3 * 2) == 64
    assert rect1.ambient_dim == 5 and rect1.dim == 2
    assert rect1.claimed_distance == 2
    assert exhaustive_min_distance(rect1) >= 2


def test_linkage_reduces_to_lifted():
    field = field_of_order(2)
    # U = {I_2} as a 1-member code on ambient 2
    from cdcodes.linalg import subspace_from_rows

    u = CodeSet(
        field=field, ambient_dim=2, dim=2, claimed_distance=4,
        members=(subspace_from_rows(MatrixGF.identity(field, 2)),),
    )
    q_mats = [f.to_matrix() for f in enumerate_mrd(2, 2, 1)]
    linked = linkage(u, q_mats, d1=4, d2=1, )
    assert len(linked) == 16
    assert linked.ambient_dim == 4
    lifted = lifted_mrd_code(2, 2, 1)
    assert set(linked.members) == set(lifted.members)


def test_linkage_product_size_and_distance():
    u = lifted_mrd_code(2, 2, 1)  # 16 members on ambient 4, distance 2
    q_mats = [f.to_matrix() for f in enumerate_mrd(2, 2, 1)]
    linked = linkage(u, q_mats, d1=2, d2=1)
    assert len(linked) == 256
    assert linked.ambient_dim == 6
    assert linked.claimed_distance == 2
    assert exhaustive_min_distance(linked) >= 2


def test_linkage_rejects_bad_inputs():
    u = lifted_mrd_code(2, 2, 1)
    with pytest.raises(ValueError):
        linkage(u, [], d1=2, d2=1)
    wrong_shape = [MatrixGF.zeros(field_of_order(2), 3, 2)]
    with pytest.raises(ValueError):
        linkage(u, wrong_shape, d1=2, d2=1)


def test_parallel_linkage_acceptance_shape():
    v = grassmannian_code(2, 4, 2)
    code = parallel_linkage(2, 2, 0, 2, v)
    assert len(code) == 571
    assert code.ambient_dim == 6 and code.dim == 2
    assert code.provenance["predicted_size"] == 2 ** 8 + 9 * 35
    # built size equals the bound formula fed with |V| as the known input
    from cdcodes.bounds import bound_parallel_linkage

    assert len(code) == bound_parallel_linkage(2, 2, 0, 2, len(v)).value


def test_parallel_linkage_defaults():
    # d = 2 defaults to the full Grassmannian
    code = parallel_linkage(2, 2, 0, 2)
    assert len(code) == 571
    # counting with a lifted-MRD v_code of 16 members
    v = lifted_mrd_code(2, 2, 1)
    code16 = parallel_linkage(2, 2, 0, 2, v)
    assert len(code16) == 256 + 9 * 16 == 400


def test_parallel_linkage_first_family_leading_block_nonsingular():
    # every family-one generator starts with I_k by construction; verify on
    # the canonical bases that the leading k x k block stays nonsingular
    code = parallel_linkage(2, 2, 0, 2)
    k = code.dim
    count_nonsingular = 0
    for s in code.members:
        lead = MatrixGF(code.field, [row[:k] for row in s.basis])
        if lead.rank() == k:
            count_nonsingular += 1
    # exactly the 256 family-one members have an invertible leading block
    assert count_nonsingular == 256


def test_parallel_linkage_validates_v_code():
    v_bad_dim = grassmannian_code(2, 4, 1)
    with pytest.raises(ValueError):
        parallel_linkage(2, 2, 0, 2, v_bad_dim)
    v_bad_ambient = grassmannian_code(2, 5, 2)
    with pytest.raises(ValueError):
        parallel_linkage(2, 2, 0, 2, v_bad_ambient)
    with pytest.raises(ValueError):
        parallel_linkage(2, 2, 0, 3)  # odd distance
    with pytest.raises(ValueError):
        parallel_linkage(2, 2, 0, 4)  # d > k


def test_parallel_linkage_h1():
    # rectangular variant: k=2, h=1, d=2 over the default Grassmannian of F_2^5
    code = parallel_linkage(2, 2, 1, 2)
    from cdcodes.rankdist import gaussian_binomial

    expected = 2 ** (5 * 2) + 9 * gaussian_binomial(5, 2, 2)
    assert len(code) == expected
    assert code.ambient_dim == 7


def test_multiblock_2211():
    code = multiblock_parallel_mrd(2, 2, 1, 1)
    assert len(code) == 25
    assert code.ambient_dim == 4
    assert exhaustive_min_distance(code) >= 2
    assert len(code) == bound_multiblock(2, 2, 1, 1).value


def test_multiblock_2212():
    code = multiblock_parallel_mrd(2, 2, 1, 2)
    assert len(code) == 2 ** 8 + 16 * 9 + 81 == 481
    assert code.ambient_dim == 6
    assert exhaustive_min_distance(code) >= 2
    assert len(code) == bound_multiblock(2, 2, 1, 2).value


def test_multiblock_rejects_bad_parameters():
    with pytest.raises(ValueError):
        multiblock_parallel_mrd(2, 4, 1, 1)  # 2t < n
    with pytest.raises(ValueError):
        multiblock_parallel_mrd(2, 2, 1, 0)


def test_multiblock_generator_layout():
    gens = list(multiblock_generators(2, 2, 1, 1))
    assert len(gens) == 25
    ident = MatrixGF.identity(field_of_order(2), 2)
    by_pos = {}
    for g in gens:
        assert g.blocks[g.position] == ident
        by_pos.setdefault(g.position, 0)
        by_pos[g.position] += 1
    assert by_pos == {0: 16, 1: 9}
    # restricted blocks sit before the identity and have rank <= t
    for g in gens:
        for b in g.blocks[:g.position]:
            assert 1 <= b.rank() <= 1


def test_multiblock_cross_position_intersections():
    # two members with different identity positions intersect in dim <= t
    gens = list(multiblock_generators(2, 2, 1, 2))
    cross = [
        (g1, g2) for g1, g2 in itertools.combinations(gens, 2)
        if g1.position != g2.position
    ]
    for g1, g2 in cross:
        assert intersection_dim(g1.subspace(), g2.subspace()) <= 1


def test_intersection_bound_pairwise():
    gens = list(multiblock_generators(2, 2, 1, 1))
    g_first = [g for g in gens if g.position == 0]
    g_second = [g for g in gens if g.position == 1]
    for g1 in g_first:
        for g2 in g_second:
            bound = intersection_bound_pairwise(g1, g2)
            assert 0 <= bound <= 2
    # zero block forces a trivial intersection bound
    field = field_of_order(2)
    ident = MatrixGF.identity(field, 2)
    zero = MatrixGF.zeros(field, 2, 2)
    g1 = BlockGenerator(0, (ident, zero))
    g2 = BlockGenerator(1, (zero, ident))
    assert intersection_bound_pairwise(g1, g2) == 0
    # identity product gives the vacuous bound n
    g3 = BlockGenerator(0, (ident, ident))
    g4 = BlockGenerator(1, (ident, ident))
    assert intersection_bound_pairwise(g3, g4) == 2
    with pytest.raises(ValueError):
        intersection_bound_pairwise(g1, g1)


def test_codeset_count_check_catches_duplicates():
    # feeding a duplicate-generating stream must fail the cardinality check
    from cdcodes.construct import _collect
    from cdcodes.linalg import subspace_from_rows

    field = field_of_order(2)
    s = subspace_from_rows(MatrixGF.identity(field, 2))
    with pytest.raises(ConstructionError):
        _collect(field, 2, 2, 2, [s, s], {}, 2, None)
