"""Exact rank-distribution combinatorics for square MRD codes over GF(q).

Everything here is arbitrary-precision integer arithmetic: Gaussian
binomials, the Delsarte rank distribution of an MRD code in the space of
n x n matrices, the closed forms for its first three nonzero counts, the
sizes of the bounded-rank subsets used by the block constructions, and the
cardinality of a lifted MRD code.  Division steps assert exact
divisibility; no rounding can occur anywhere.  All functions are pure, so
the memo caches are safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n.

    Computed as the telescoping product prod_i (q^(n-i) - 1)/(q^(i+1) - 1)
    with interleaved exact divisions; each partial quotient is itself a
    Gaussian binomial, so every division is exact.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(k):
        out *= q ** (n - i) - 1
        den = q ** (i + 1) - 1
        assert out % den == 0, "internal error: inexact division in Gaussian binomial"
        out //= den
    return out


@dataclass(frozen=True)
class RankDistribution:
    """Rank counts of an MRD code with rank distance d in n x n matrices over GF(q).

    counts[r] is the number of codewords of rank r, for r = 0..n.
    """

    q: int
    n: int
    d: int
    counts: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.counts[r]

    def total(self) -> int:
        return sum(self.counts)

    def range_sum(self, lo: int, hi: int) -> int:
        """Sum of counts for ranks lo..hi inclusive."""
        return sum(self.counts[lo:hi + 1])


@lru_cache(maxsize=None)
def delsarte_distribution(q: int, n: int, d: int) -> RankDistribution:
    """Rank distribution of an MRD code with rank distance d in n x n matrices.

    A_r = [n r]_q * sum_{i=0}^{r-d} (-1)^i q^binom(i,2) [r i]_q (q^(n(r-i-d+1)) - 1)
    for d <= r <= n, A_0 = 1, and A_r = 0 for 0 < r < d.  The normalization
    sum_r A_r = q^(n(n-d+1)) is asserted.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    counts = [0] * (n + 1)
    counts[0] = 1
    for r in range(d, n + 1):
        acc = 0
        for i in range(r - d + 1):
            exponent = n * (r - i - d + 1)
            assert r - i >= d
            term = gaussian_binomial(r, i, q) * (q ** exponent - 1)
            term *= q ** (i * (i - 1) // 2)
            acc += -term if i % 2 else term
        counts[r] = gaussian_binomial(n, r, q) * acc
    dist = RankDistribution(q, n, d, tuple(counts))
    assert dist.total() == q ** (n * (n - d + 1)), \
        "internal error: rank distribution does not sum to the code size"
    return dist


def closed_form_first_three(q: int, n: int, d: int):
    """(A_d, A_{d+1}, A_{d+2}) in closed form; entries beyond rank n are None.

    Must agree entry for entry with delsarte_distribution.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    a_d = (q ** n - 1) * gaussian_binomial(n, d, q)
    a_d1 = a_d2 = None
    if d + 1 <= n:
        inner = q ** (2 * n) - 1 - Fraction(q ** (d + 1) - 1, q - 1) * (q ** n - 1)
        val = gaussian_binomial(n, d + 1, q) * inner
        assert val.denominator == 1
        a_d1 = int(val)
    if d + 2 <= n:
        inner = (
            q ** (3 * n) - 1
            - Fraction(q ** (d + 2) - 1, q - 1) * (q ** (2 * n) - 1)
            + q
            * Fraction(q ** (d + 2) - 1, q ** 2 - 1)
            * Fraction(q ** (d + 1) - 1, q - 1)
            * (q ** n - 1)
        )
        val = gaussian_binomial(n, d + 2, q) * inner
        assert val.denominator == 1
        a_d2 = int(val)
    return a_d, a_d1, a_d2


def filtration_size(q: int, n: int, t: int, j: int) -> int:
    """Number of q-degree <= t maps on GF(q^n) with kernel dimension >= j, zero map excluded.

    Equals the sum of the rank counts for ranks n-t .. n-j of the MRD code
    with rank distance n-t (kernel >= j is rank <= n-j, and every nonzero
    codeword has rank >= n-t).
    """
    if not 0 <= j <= t < n:
        raise ValueError(f"need 0 <= j <= t < n, got q={q}, n={n}, t={t}, j={j}")
    dist = delsarte_distribution(q, n, n - t)
    return dist.range_sum(n - t, n - j)


def lifted_mrd_size(q: int, n: int, d: int) -> int:
    """Cardinality q^(n(n-d+1)) of the lifted code of an MRD code with rank distance d."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return q ** (n * (n - d + 1))
