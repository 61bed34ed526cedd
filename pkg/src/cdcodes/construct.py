"""Build constant-dimension subspace codes explicitly at desk scale.

Four constructions, all returning a CodeSet of canonical subspaces:

* lifted_mrd_code / rect_lifted_mrd_code: row spaces of (I | A) with A
  running over a (possibly rectangular) MRD code.
* linkage: append rank-metric codewords to the generator matrices of an
  existing code, multiplying the sizes while the distance stays at least
  min(d1, 2*d2).
* parallel_linkage: two linked families on ambient 3k+h, the second one
  prefixed by bounded-rank k x k maps so the families stay far apart.
* multiblock_parallel_mrd: s+1 blocks with the identity at every possible
  position; blocks before the identity are restricted to maps of kernel
  dimension at least n-t (zero map excluded), blocks after it are free.

Every build checks its predicted cardinality: members are deduplicated
through canonical subspace hashing, so a silent collision would surface as
a count mismatch.  Member tuples are sorted canonically, making the output
independent of enumeration schedule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from .gf import GF, field_of_order
from .linalg import MatrixGF, Subspace, enumerate_subspaces, intersection_dim, subspace_from_rows
from .qpoly import (
    BudgetError,
    enumerate_filtration,
    enumerate_mrd,
    enumerate_rect_mrd,
)
from .rankdist import filtration_size, gaussian_binomial, lifted_mrd_size

DEFAULT_MEMBER_BUDGET = 1 << 24


class ConstructionError(ValueError):
    """A build violated one of its own invariants (count, rank, shape)."""


@dataclass(frozen=True)
class CodeSet:
    """A finite set of equal-dimension subspaces of GF(q)^N with provenance."""

    field: GF
    ambient_dim: int
    dim: int
    claimed_distance: int
    members: tuple[Subspace, ...]
    provenance: dict = dataclass_field(default_factory=dict, compare=False)

    @property
    def q(self) -> int:
        return self.field.order

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self):
        return (
            f"CodeSet(q={self.q}, ambient={self.ambient_dim}, dim={self.dim}, "
            f"d>={self.claimed_distance}, size={len(self.members)})"
        )


def _collect(field, ambient_dim, dim, distance, subspaces, provenance, predicted, budget):
    if budget is not None and predicted > budget:
        raise BudgetError(
            f"construction would produce {predicted} members, above the budget {budget}"
        )
    seen = set()
    for s in subspaces:
        if s.dim != dim or s.ambient_dim != ambient_dim:
            raise ConstructionError(
                f"member with dim {s.dim} in ambient {s.ambient_dim}, "
                f"expected dim {dim} in ambient {ambient_dim}"
            )
        seen.add(s)
    if len(seen) != predicted:
        raise ConstructionError(
            f"built {len(seen)} distinct members but the formula predicts {predicted}"
        )
    provenance = dict(provenance, predicted_size=predicted)
    return CodeSet(
        field=field,
        ambient_dim=ambient_dim,
        dim=dim,
        claimed_distance=distance,
        members=tuple(sorted(seen)),
        provenance=provenance,
    )


def lifted_mrd_code(q: int, n: int, t: int, *, budget: int | None = DEFAULT_MEMBER_BUDGET) -> CodeSet:
    """Row spaces of (I_n | M_f), f of q-degree <= t: a (2n, q^(n(t+1)), 2(n-t), n) code."""
    field = field_of_order(q)
    ident = MatrixGF.identity(field, n)
    predicted = lifted_mrd_size(q, n, n - t)

    def members():
        for f in enumerate_mrd(q, n, t, budget=budget):
            yield subspace_from_rows(ident.hstack(f.to_matrix()))

    return _collect(
        field, 2 * n, n, 2 * (n - t), members(),
        {"construction": "lifted", "q": q, "n": n, "t": t},
        predicted, budget,
    )


def rect_lifted_mrd_code(q: int, k: int, h: int, t: int, *,
                         budget: int | None = DEFAULT_MEMBER_BUDGET) -> CodeSet:
    """Row spaces of (I_k | M), M in the k x (k+h) MRD code of q-degree <= t maps.

    A (2k+h, q^((k+h)(t+1)), 2(k-t), k) code; h = 0 recovers lifted_mrd_code.
    """
    field = field_of_order(q)
    ident = MatrixGF.identity(field, k)
    predicted = q ** ((k + h) * (t + 1))

    def members():
        for f in enumerate_rect_mrd(q, k, h, t, budget=budget):
            yield subspace_from_rows(ident.hstack(f.to_matrix()))

    return _collect(
        field, 2 * k + h, k, 2 * (k - t), members(),
        {"construction": "rect-lifted", "q": q, "k": k, "h": h, "t": t},
        predicted, budget,
    )


def grassmannian_code(q: int, ambient_dim: int, dim: int, *,
                      budget: int | None = DEFAULT_MEMBER_BUDGET) -> CodeSet:
    """Every dim-dimensional subspace of GF(q)^ambient_dim; distance 2 when nontrivial."""
    field = field_of_order(q)
    predicted = gaussian_binomial(ambient_dim, dim, q)
    return _collect(
        field, ambient_dim, dim, 2, enumerate_subspaces(field, ambient_dim, dim),
        {"construction": "grassmannian", "q": q, "N": ambient_dim, "k": dim},
        predicted, budget,
    )


def _generator_matrices(code: CodeSet):
    """SC-representation of a CodeSet: the canonical full-row-rank bases."""
    return [s.basis_matrix() for s in code.members]


def linkage(u_code: CodeSet, q_matrices, d1: int, d2: int, *,
            budget: int | None = DEFAULT_MEMBER_BUDGET) -> CodeSet:
    """Row spaces of (U | Q): a (n1+n2, N1*N2, min(d1, 2*d2), k) code.

    u_code supplies the SC-representation (its canonical bases); q_matrices
    must be a rank-metric code of k x n2 matrices with rank distance >= d2.
    """
    q_matrices = list(q_matrices)
    if not q_matrices:
        raise ValueError("the rank-metric code must be nonempty")
    k = u_code.dim
    n2 = q_matrices[0].ncols
    for m in q_matrices:
        if m.nrows != k or m.ncols != n2 or m.field != u_code.field:
            raise ValueError("rank-metric codewords must be k x n2 over the same field")
    gens = _generator_matrices(u_code)
    for g in gens:
        if g.rank() != k:
            raise ConstructionError("SC-representation matrix with deficient row rank")
    predicted = len(gens) * len(q_matrices)
    ambient = u_code.ambient_dim + n2

    def members():
        for g in gens:
            for m in q_matrices:
                yield subspace_from_rows(g.hstack(m))

    return _collect(
        u_code.field, ambient, k, min(d1, 2 * d2), members(),
        {"construction": "linkage", "q": u_code.q, "n1": u_code.ambient_dim,
         "n2": n2, "d1": d1, "d2": d2},
        predicted, budget,
    )


def parallel_linkage(q: int, k: int, h: int, d: int, v_code: CodeSet | None = None, *,
                     budget: int | None = DEFAULT_MEMBER_BUDGET) -> CodeSet:
    """Two linked families on ambient 3k+h with distance d (d even, d <= k).

    Family one: (I_k | Q | R) with Q over the rectangular MRD code on k x (k+h)
    and R over the square MRD code, both of q-degree <= k - d/2.  Family two:
    (Q' | V) with Q' a k x k map of rank between d/2 and k - d/2 and V a
    generator matrix of v_code, any (2k+h, d, k) code.  By default v_code is
    the full Grassmannian for d = 2 and the lifted rectangular MRD code
    otherwise.
    """
    if d % 2 != 0:
        raise ValueError("the subspace distance d must be even")
    if not 0 < d <= k:
        raise ValueError(f"need 0 < d <= k, got d={d}, k={k}")
    if h < 0:
        raise ValueError("h must be non-negative")
    t = k - d // 2
    field = field_of_order(q)
    if v_code is None:
        if d == 2:
            v_code = grassmannian_code(q, 2 * k + h, k, budget=budget)
        else:
            v_code = rect_lifted_mrd_code(q, k, h, t, budget=budget)
    if v_code.dim != k or v_code.ambient_dim != 2 * k + h or v_code.field != field:
        raise ValueError("v_code must consist of k-dim subspaces of GF(q)^(2k+h)")
    if v_code.claimed_distance < d:
        raise ValueError(f"v_code distance {v_code.claimed_distance} is below {d}")

    ident = MatrixGF.identity(field, k)
    subset_size = filtration_size(q, k, t, d // 2)
    predicted = q ** ((2 * k + h) * (t + 1)) + subset_size * len(v_code)

    def members():
        square = [f.to_matrix() for f in enumerate_mrd(q, k, t, budget=budget)]
        for rect in enumerate_rect_mrd(q, k, h, t, budget=budget):
            left = ident.hstack(rect.to_matrix())
            for m in square:
                yield subspace_from_rows(left.hstack(m))
        v_gens = _generator_matrices(v_code)
        for f in enumerate_mrd(q, k, t, budget=budget):
            m = f.to_matrix()
            r = m.rank()
            if not d // 2 <= r <= k - d // 2:
                continue
            for g in v_gens:
                yield subspace_from_rows(m.hstack(g))

    return _collect(
        field, 3 * k + h, k, d, members(),
        {"construction": "parallel-linkage", "q": q, "k": k, "h": h, "d": d,
         "v_code": v_code.provenance.get("construction", "custom"),
         "v_size": len(v_code)},
        predicted, budget,
    )


@dataclass(frozen=True)
class BlockGenerator:
    """Generator tuple of a multi-block member: n x n blocks, identity at `position`."""

    position: int  # 0-based block index of the identity
    blocks: tuple[MatrixGF, ...]

    def matrix(self) -> MatrixGF:
        m = self.blocks[0]
        for b in self.blocks[1:]:
            m = m.hstack(b)
        return m

    def subspace(self) -> Subspace:
        return subspace_from_rows(self.matrix())


def multiblock_generators(q: int, n: int, t: int, s: int, *,
                          budget: int | None = DEFAULT_MEMBER_BUDGET):
    """Generator tuples of the (s+1)-block construction, one per member.

    For identity position p (0-based), the p blocks before the identity run
    over the maps with kernel dimension >= n-t (zero map excluded) and the
    s-p blocks after it run over the whole MRD code.
    """
    if s < 1:
        raise ValueError("need at least s = 1 extra blocks")
    if 2 * t < n:
        raise ValueError(f"need 2t >= n, got t={t}, n={n}")
    field = field_of_order(q)
    f_size = filtration_size(q, n, t, n - t)
    total = sum(q ** ((s - j) * n * (t + 1)) * f_size ** j for j in range(s + 1))
    if budget is not None and total > budget:
        raise BudgetError(
            f"the {s + 1}-block construction has {total} members, above the budget {budget}"
        )
    ident = MatrixGF.identity(field, n)
    full = [f.to_matrix() for f in enumerate_mrd(q, n, t, budget=budget)]
    restricted = [
        f.to_matrix() for f in enumerate_filtration(q, n, t, n - t, budget=budget)
    ]

    def gen():
        for pos in range(s + 1):
            before = itertools.product(restricted, repeat=pos)
            for pre in before:
                for post in itertools.product(full, repeat=s - pos):
                    yield BlockGenerator(pos, pre + (ident,) + post)

    return gen()


def multiblock_parallel_mrd(q: int, n: int, t: int, s: int, *,
                            budget: int | None = DEFAULT_MEMBER_BUDGET) -> CodeSet:
    """The (s+1)-block parallel code: ((s+1)n, sum_j q^((s-j)n(t+1)) F^j, 2(n-t), n)."""
    field = field_of_order(q)
    f_size = filtration_size(q, n, t, n - t)
    predicted = sum(
        q ** ((s - j) * n * (t + 1)) * f_size ** j for j in range(s + 1)
    )
    members = (g.subspace() for g in multiblock_generators(q, n, t, s, budget=budget))
    return _collect(
        field, (s + 1) * n, n, 2 * (n - t), members,
        {"construction": "multiblock", "q": q, "n": n, "t": t, "s": s},
        predicted, budget,
    )


def intersection_bound_pairwise(g1: BlockGenerator, g2: BlockGenerator) -> int:
    """Intersection-dimension bound n - rank(I - A_j B_i) for members with
    the identity at different block positions; asserts the actual
    intersection dimension never exceeds it."""
    if len(g1.blocks) != len(g2.blocks):
        raise ValueError("generator tuples have different block counts")
    i, j = g1.position, g2.position
    if i == j:
        raise ValueError("the bound applies to distinct identity positions only")
    a_j = g1.blocks[j]
    b_i = g2.blocks[i]
    n = a_j.nrows
    ident = MatrixGF.identity(a_j.field, n)
    bound = n - ident.sub(a_j @ b_i).rank()
    actual = intersection_dim(g1.subspace(), g2.subspace())
    assert actual <= bound, (
        f"intersection dimension {actual} exceeds the bound {bound}"
    )
    return bound
