"""Linearized polynomials over GF(q^n) and the MRD codes they generate.

A map x -> a_0 x + a_1 x^q + ... + a_t x^(q^t) with coefficients in
GF(q^n) is GF(q)-linear, so it has an n x n matrix over GF(q); the code of
all such maps with q-degree at most t is MRD with rank distance n - t.
This module enumerates that code, its bounded-rank subsets (kernel
dimension at least j, zero map excluded), and the rectangular variant
GF(q^k) -> GF(q^(k+h)) obtained by applying a fixed GF(q)-linear embedding
after the Frobenius powers.

Enumeration order is an odometer over the integer codes of
(a_0, ..., a_t) with a_0 varying fastest; streams accept start/stop
indices so disjoint sub-ranges can be enumerated independently and
deterministically.
"""

from __future__ import annotations

from .gf import GFExtension, extension_field
from .linalg import MatrixGF

DEFAULT_ENUM_BUDGET = 1 << 24


class BudgetError(Exception):
    """An enumeration or construction would exceed its element budget."""


class QPolynomial:
    """The GF(q)-linear map x -> sum a_i x^(q^i) on GF(q^n)."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext: GFExtension, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least the degree-0 coefficient")
        for a in coeffs:
            if not 0 <= a < ext.order:
                raise ValueError("coefficient code out of range")
        self.ext = ext
        self.coeffs = coeffs

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def evaluate(self, x: int) -> int:
        ext = self.ext
        acc = 0
        power = x
        for a in self.coeffs:
            if a:
                acc = ext.add(acc, ext.mul(a, power))
            power = ext.frobenius(power, 1)
        return acc

    def to_matrix(self) -> MatrixGF:
        """n x n matrix over GF(q), row i = coordinates of f(alpha^i).

        Row-vector convention: coords(f(x)) = coords(x) @ M.
        """
        ext = self.ext
        q = ext.q
        rows = [ext.to_vector(self.evaluate(q ** i)) for i in range(ext.n)]
        return MatrixGF(ext.base, rows)

    def kernel_dim(self) -> int:
        m = self.to_matrix()
        return m.nrows - m.rank()

    def _combine(self, other: "QPolynomial", op) -> "QPolynomial":
        if self.ext != other.ext:
            raise ValueError("mixed extension fields")
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a = a + (0,) * (len(b) - len(a))
        elif len(b) < len(a):
            b = b + (0,) * (len(a) - len(b))
        return QPolynomial(self.ext, tuple(op(x, y) for x, y in zip(a, b)))

    def __add__(self, other):
        return self._combine(other, self.ext.add)

    def __sub__(self, other):
        return self._combine(other, self.ext.sub)

    def __eq__(self, other):
        return (
            isinstance(other, QPolynomial)
            and self.ext == other.ext
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial(q={self.ext.q}, n={self.ext.n}, coeffs={self.coeffs})"


def _check_budget(total: int, budget: int, what: str):
    if budget is not None and total > budget:
        raise BudgetError(
            f"{what} has {total} elements, above the budget of {budget}; "
            "use the formula-only paths or raise the budget"
        )


def enumerate_mrd(q: int, n: int, t: int, *, start: int = 0, stop: int | None = None,
                  budget: int | None = DEFAULT_ENUM_BUDGET, ext: GFExtension | None = None):
    """All q^(n(t+1)) maps of q-degree <= t on GF(q^n), in odometer order.

    The code of returned polynomials is an MRD code with rank distance n - t.
    Validation (including the budget check) happens at call time.
    """
    if not 0 <= t < n:
        raise ValueError(f"need 0 <= t < n, got t={t}, n={n}")
    if ext is None:
        ext = extension_field(q, n)
    order = ext.order
    total = order ** (t + 1)
    _check_budget(total, budget, f"the rank-metric code with q={q}, n={n}, t={t}")
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError("bad enumeration sub-range")

    def gen():
        for idx in range(start, stop):
            coeffs = []
            rest = idx
            for _ in range(t + 1):
                rest, a = divmod(rest, order)
                coeffs.append(a)
            yield QPolynomial(ext, coeffs)

    return gen()


def enumerate_filtration(q: int, n: int, t: int, j: int, *, include_zero: bool = False,
                         budget: int | None = DEFAULT_ENUM_BUDGET):
    """Maps of q-degree <= t whose kernel dimension is at least j.

    The zero map (kernel dimension n) is excluded by default, which makes
    the stream length equal filtration_size(q, n, t, j); pass
    include_zero=True to keep it.
    """
    if not 0 <= j <= t:
        raise ValueError(f"need 0 <= j <= t, got j={j}, t={t}")
    for f in enumerate_mrd(q, n, t, budget=budget):
        if f.is_zero():
            if include_zero:
                yield f
            continue
        if f.kernel_dim() >= j:
            yield f


class RectQPolynomial:
    """GF(q)-linear map GF(q^k) -> GF(q^(k+h)): x -> sum a_i phi(x^(q^i)).

    The Frobenius powers are taken in GF(q^k) first; phi then embeds by
    padding the length-k coordinate vector with h zeros (a fixed full-rank
    coordinate embedding).  Coefficients live in GF(q^(k+h)).
    """

    __slots__ = ("small", "big", "coeffs")

    def __init__(self, small: GFExtension, big: GFExtension, coeffs):
        if small.base != big.base or big.n < small.n:
            raise ValueError("incompatible field pair for a rectangular map")
        coeffs = tuple(coeffs)
        for a in coeffs:
            if not 0 <= a < big.order:
                raise ValueError("coefficient code out of range")
        self.small = small
        self.big = big
        self.coeffs = coeffs

    @property
    def k(self) -> int:
        return self.small.n

    @property
    def h(self) -> int:
        return self.big.n - self.small.n

    def embed(self, x: int) -> int:
        """The coordinate embedding phi: pad with zeros on the high end."""
        return self.big.from_vector(self.small.to_vector(x) + (0,) * self.h)

    def evaluate(self, x: int) -> int:
        big, small = self.big, self.small
        acc = 0
        power = x
        for a in self.coeffs:
            if a:
                acc = big.add(acc, big.mul(a, self.embed(power)))
            power = small.frobenius(power, 1)
        return acc

    def to_matrix(self) -> MatrixGF:
        """k x (k+h) matrix over GF(q), row i = coordinates of f(beta^i)."""
        q = self.small.q
        rows = [self.big.to_vector(self.evaluate(q ** i)) for i in range(self.k)]
        return MatrixGF(self.small.base, rows)

    def kernel_dim(self) -> int:
        m = self.to_matrix()
        return m.nrows - m.rank()

    def __eq__(self, other):
        return (
            isinstance(other, RectQPolynomial)
            and (self.small, self.big) == (other.small, other.big)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return (
            f"RectQPolynomial(q={self.small.q}, k={self.k}, h={self.h}, "
            f"coeffs={self.coeffs})"
        )


def enumerate_rect_mrd(q: int, k: int, h: int, t: int, *,
                       budget: int | None = DEFAULT_ENUM_BUDGET):
    """All q^((k+h)(t+1)) rectangular maps of q-degree <= t, odometer order.

    Their matrices form an MRD code of k x (k+h) matrices with rank
    distance k - t; with h = 0 this is the square code again.
    """
    if not 0 <= t < k:
        raise ValueError(f"need 0 <= t < k, got t={t}, k={k}")
    if h < 0:
        raise ValueError("h must be non-negative")
    small = extension_field(q, k)
    big = extension_field(q, k + h)
    order = big.order
    total = order ** (t + 1)
    _check_budget(total, budget, f"the rectangular rank-metric code q={q}, {k}x{k + h}, t={t}")

    def gen():
        for idx in range(total):
            coeffs = []
            rest = idx
            for _ in range(t + 1):
                rest, a = divmod(rest, order)
                coeffs.append(a)
            yield RectQPolynomial(small, big, coeffs)

    return gen()
