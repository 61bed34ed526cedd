"""Independent verification of built subspace codes.

The distance oracles here deliberately avoid the constructions' own
reasoning: a code's minimum distance is recomputed from pairwise subspace
intersections, where the intersection dimension comes from counting common
member vectors (each subspace is expanded into its q^k vectors once, stored
as a bitmask over all q^N ambient vector codes, and pairs are intersected
with vectorized popcounts).  Codes whose mask table would be too large fall
back to the stacked-rank formula pair by pair.

Sampling uses SplitMix64, fixed here by its constants so independent
implementations can reproduce reports bit for bit: the state advances by
0x9E3779B97F4A7C15 per draw and the output mix is
z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
z *= 0x94D049BB133111EB; z ^= z >> 31 (all mod 2^64).  Pair draws take two
indices via next() % size, redrawing the second until it differs.

Verification never mutates its inputs, and pairwise scans reduce by min,
so splitting pair ranges across workers cannot change any result.
"""

from __future__ import annotations

import math

import numpy as np

from .linalg import subspace_distance

MASK_BIT_BUDGET = 1 << 28

_U64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 generator (see module docstring for the constants)."""

    def __init__(self, seed: int):
        self.state = seed & _U64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _U64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        return self.next_u64() % n


def _popcount_rows(arr: np.ndarray) -> np.ndarray:
    """Per-row popcount of a 2-D uint64 array."""
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr).sum(axis=1, dtype=np.int64)
    bytes_view = arr.view(np.uint8)
    table = _POPCOUNT8
    return table[bytes_view].sum(axis=1, dtype=np.int64)


_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _sorted_members(code):
    return sorted(code.members)


def membership_masks(code, bit_budget: int = MASK_BIT_BUDGET):
    """(members_sorted, mask array) or (members_sorted, None) if too large.

    Row i of the array is the characteristic bitmask of member i's vector
    set over the q^N ambient vector codes, packed into uint64 words.
    """
    members = _sorted_members(code)
    points = code.q ** code.ambient_dim
    if not members or points * len(members) > bit_budget:
        return members, None
    words = (points + 63) // 64
    arr = np.zeros((len(members), words), dtype=np.uint64)
    for idx, s in enumerate(members):
        mask = 0
        for v in s.vectors():
            mask |= 1 << v
        for w in range(words):
            arr[idx, w] = (mask >> (64 * w)) & _U64
    return members, arr


def _dim_from_count(count: int, q: int) -> int:
    d = 0
    c = count
    while c > 1:
        if c % q:
            raise AssertionError(f"intersection count {count} is not a power of q={q}")
        c //= q
        d += 1
    return d


def min_distance_exhaustive(code, cap: int = 5000):
    """(exact minimum distance, lexicographically smallest witnessing pair).

    Scans all unordered pairs; raises if the code is larger than cap.
    A singleton or empty code has no pairs: distance math.inf, witness None.
    """
    m = len(code.members)
    if m > cap:
        raise ValueError(f"code has {m} members, above the exhaustive cap {cap}")
    if m < 2:
        return math.inf, None
    members, masks = membership_masks(code)
    if masks is None:
        return _min_distance_pairs_generic(members)
    k2 = 2 * code.dim
    best_count = -1
    witness = None
    for i in range(m - 1):
        inter = masks[i] & masks[i + 1:]
        counts = _popcount_rows(inter)
        row_max = int(counts.max())
        if row_max > best_count:
            best_count = row_max
            j = i + 1 + int(np.argmax(counts))
            witness = (members[i], members[j])
    dist = k2 - 2 * _dim_from_count(best_count, code.q)
    return dist, witness


def _min_distance_pairs_generic(members):
    best = None
    witness = None
    for i in range(len(members) - 1):
        for j in range(i + 1, len(members)):
            d = subspace_distance(members[i], members[j])
            if best is None or d < best:
                best = d
                witness = (members[i], members[j])
    return best, witness


def min_distance_sampled(code, pairs: int, seed: int):
    """Minimum distance over `pairs` fixed-seed uniform pair draws.

    An upper bound on the true minimum: violations of a claimed distance
    show up immediately, agreement proves nothing.  Deterministic given the
    seed; the witness is the lexicographically smallest sampled minimizer.
    """
    if pairs < 1:
        raise ValueError("need at least one sampled pair")
    m = len(code.members)
    if m < 2:
        return math.inf, None
    rng = SplitMix64(seed)
    left = np.empty(pairs, dtype=np.int64)
    right = np.empty(pairs, dtype=np.int64)
    for idx in range(pairs):
        i = rng.randbelow(m)
        j = rng.randbelow(m)
        while j == i:
            j = rng.randbelow(m)
        left[idx] = i
        right[idx] = j
    members, masks = membership_masks(code)
    k2 = 2 * code.dim
    if masks is None:
        best = None
        witness = None
        for i, j in zip(left.tolist(), right.tolist()):
            d = subspace_distance(members[i], members[j])
            pair = tuple(sorted((members[i], members[j])))
            if best is None or d < best or (d == best and pair < witness):
                best, witness = d, pair
        return best, witness
    counts = np.empty(pairs, dtype=np.int64)
    chunk = 1 << 16
    for lo in range(0, pairs, chunk):
        hi = min(lo + chunk, pairs)
        inter = masks[left[lo:hi]] & masks[right[lo:hi]]
        counts[lo:hi] = _popcount_rows(inter)
    best_count = int(counts.max())
    where = np.nonzero(counts == best_count)[0]
    pair_ids = sorted(
        (min(int(left[w]), int(right[w])), max(int(left[w]), int(right[w]))) for w in where
    )
    i, j = pair_ids[0]
    dist = k2 - 2 * _dim_from_count(best_count, code.q)
    return dist, (members[i], members[j])


def empirical_rank_distribution(matrices) -> dict[int, int]:
    """Exact rank histogram of a finite stream of matrices."""
    hist: dict[int, int] = {}
    for m in matrices:
        r = m.rank()
        hist[r] = hist.get(r, 0) + 1
    return dict(sorted(hist.items()))


_RANK_TABLES: dict[tuple[int, int], np.ndarray] = {}


def _gf2_rank_table(nrows: int, ncols: int) -> np.ndarray:
    """Rank of every nrows x ncols GF(2) matrix, indexed by its packed bits."""
    from .linalg import _rref_bits

    key = (nrows, ncols)
    if key not in _RANK_TABLES:
        table = np.empty(1 << (nrows * ncols), dtype=np.uint8)
        mask = (1 << ncols) - 1
        for bits in range(len(table)):
            rows = [(bits >> (ncols * i)) & mask for i in range(nrows)]
            table[bits] = _rref_bits(rows, ncols)[1]
        _RANK_TABLES[key] = table
    return _RANK_TABLES[key]


def pairwise_min_rank_distance(matrices) -> int:
    """Exact minimum of rank(A - B) over all unordered pairs of distinct matrices.

    GF(2) matrices of at most 16 entries are packed into words and ranked
    through a lookup table, which keeps the full quadratic scan fast; other
    shapes take the direct route.
    """
    matrices = list(matrices)
    if len(matrices) < 2:
        return math.inf
    first = matrices[0]
    if first.field.order == 2 and first.nrows * first.ncols <= 16:
        ncols = first.ncols
        packed = []
        for m in matrices:
            bits = 0
            for i, row in enumerate(m.rows):
                for c, x in enumerate(row):
                    bits |= x << (ncols * i + c)
            packed.append(bits)
        arr = np.array(packed, dtype=np.uint32)
        table = _gf2_rank_table(first.nrows, ncols)
        best = first.nrows
        for i in range(len(arr) - 1):
            ranks = table[np.bitwise_xor(arr[i], arr[i + 1:])]
            best = min(best, int(ranks.min()))
            if best == 0:
                break
        return best
    best = None
    for i in range(len(matrices) - 1):
        for j in range(i + 1, len(matrices)):
            r = matrices[i].sub(matrices[j]).rank()
            if best is None or r < best:
                best = r
    return best


def _subspace_payload(s) -> list[list[int]]:
    return [list(row) for row in s.basis]


def validate_codeset(code, exhaustive_cap: int = 5000, sampled_pairs: int = 1_000_000,
                     seed: int = 0x5EED, mode: str = "auto") -> dict:
    """Machine-readable pass/fail report on a CodeSet's own claims.

    Checks membership invariants, cardinality against the construction's
    predicted size, duplicate-freeness, and the claimed minimum distance.
    mode "auto" scans exhaustively up to exhaustive_cap members and samples
    beyond; "exhaustive" and "sampled" force one path.
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    checks = []

    def add(check, ok, expected, actual, witness=None):
        entry = {"check": check, "pass": bool(ok), "expected": expected, "actual": actual}
        if witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    bad_members = sum(
        1 for s in code.members
        if s.dim != code.dim or s.ambient_dim != code.ambient_dim
    )
    add("member_dimensions", bad_members == 0,
        f"all members {code.dim}-dim in ambient {code.ambient_dim}",
        f"{bad_members} offending members")

    distinct = len(set(code.members))
    add("distinct_members", distinct == len(code.members), len(code.members), distinct)

    predicted = code.provenance.get("predicted_size")
    if predicted is not None:
        add("cardinality", len(code.members) == predicted, predicted, len(code.members))

    if len(code.members) < 2:
        add("min_distance", True, f">= {code.claimed_distance}", "no pairs")
    elif bad_members == 0:
        exhaustively = mode == "exhaustive" or (
            mode == "auto" and len(code.members) <= exhaustive_cap
        )
        if exhaustively:
            dist, witness = min_distance_exhaustive(code, cap=exhaustive_cap)
            how = "exhaustive"
        else:
            dist, witness = min_distance_sampled(code, sampled_pairs, seed)
            how = f"sampled({sampled_pairs},seed={seed})"
        add("min_distance", dist >= code.claimed_distance,
            f">= {code.claimed_distance}", f"{dist} ({how})",
            witness=[_subspace_payload(w) for w in witness] if witness else None)
    else:
        add("min_distance", False, f">= {code.claimed_distance}",
            "skipped: malformed members")

    return {"pass": all(c["pass"] for c in checks), "checks": checks}
