"""Matrices and subspaces over GF(q), row convention throughout.

A subspace is identified with the unique reduced row-echelon basis of its
row space, which makes equality, hashing and set membership exact integer
comparisons.  For q = 2 the elimination routines run on bit-packed rows
(column c lives in bit c); the packed code of a row then coincides with the
base-q integer encoding used for ambient vectors.  All values are immutable
after construction and every operation here is pure.
"""

from __future__ import annotations

import itertools

from .gf import GF


def encode_vector(coords, q: int) -> int:
    """Ambient vector -> integer code: base-q digits, coordinate 0 least significant."""
    out = 0
    for c in reversed(coords):
        out = out * q + c
    return out


def decode_vector(code: int, q: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


class MatrixGF:
    """Immutable dense matrix over a GF instance; entries are element codes."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: GF, rows):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for x in r:
                if not 0 <= x < field.order:
                    raise ValueError(f"entry {x} outside field of order {field.order}")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, field: GF, n: int) -> "MatrixGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: GF, nrows: int, ncols: int) -> "MatrixGF":
        return cls(field, [[0] * ncols for _ in range(nrows)])

    def hstack(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field or self.nrows != other.nrows:
            raise ValueError("hstack shape/field mismatch")
        return MatrixGF(self.field, [a + b for a, b in zip(self.rows, other.rows)])

    def vstack(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field or self.ncols != other.ncols:
            raise ValueError("vstack shape/field mismatch")
        return MatrixGF(self.field, self.rows + other.rows)

    def add(self, other: "MatrixGF") -> "MatrixGF":
        self._check_same_shape(other)
        f = self.field
        return MatrixGF(f, [
            [f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def sub(self, other: "MatrixGF") -> "MatrixGF":
        self._check_same_shape(other)
        f = self.field
        return MatrixGF(f, [
            [f.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.field != other.field or self.ncols != other.nrows:
            raise ValueError("matmul shape/field mismatch")
        f = self.field
        ot = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append([
                _dot(f, row, col) for col in ot
            ])
        return MatrixGF(f, out)

    def _check_same_shape(self, other):
        if self.field != other.field or (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape/field mismatch")

    def rref(self) -> "MatrixGF":
        if self.field.order == 2:
            packed = [_pack_row(r) for r in self.rows]
            reduced, _rank, _piv = _rref_bits(packed, self.ncols)
            return MatrixGF(self.field, [_unpack_row(r, self.ncols) for r in reduced])
        reduced, _rank, _piv = _rref_generic(self.field, self.rows, self.ncols)
        return MatrixGF(self.field, reduced)

    def rank(self) -> int:
        if self.field.order == 2:
            return _rref_bits([_pack_row(r) for r in self.rows], self.ncols)[1]
        return _rref_generic(self.field, self.rows, self.ncols)[1]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"MatrixGF(q={self.field.order}, {self.nrows}x{self.ncols})"


def _dot(f, row, col) -> int:
    acc = 0
    for a, b in zip(row, col):
        if a and b:
            acc = f.add(acc, f.mul(a, b))
    return acc


# ----------------------------------------------------------------------
# Elimination kernels.  Both return (rows, rank, pivot_columns); the
# bit-packed q=2 kernel must agree with the generic one entry for entry.
# ----------------------------------------------------------------------

def _rref_generic(field, rows, ncols):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [
                    field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(r_) for r_ in rows], r, pivots


def _pack_row(row) -> int:
    out = 0
    for c, x in enumerate(row):
        if x:
            out |= 1 << c
    return out


def _unpack_row(bits: int, ncols: int) -> tuple[int, ...]:
    return tuple((bits >> c) & 1 for c in range(ncols))


def _rref_bits(rows, ncols):
    rows = list(rows)
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        piv = next((i for i in range(r, nrows) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r and rows[i] & bit:
                rows[i] ^= pivot_row
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, r, pivots


def rref(m: MatrixGF) -> MatrixGF:
    """Reduced row-echelon form; the row space is preserved."""
    return m.rref()


def rank(m: MatrixGF) -> int:
    return m.rank()


def kernel_dim(m: MatrixGF) -> int:
    """Dimension of the left kernel {x : x M = 0} = nrows - rank."""
    return m.nrows - m.rank()


class Subspace:
    """A subspace of GF(q)^N, stored as its canonical RREF basis.

    Two Subspace values are equal iff their bases are entrywise equal;
    ordering compares (dim, basis rows), which fixes the canonical
    enumeration order used for witnesses and file output.
    """

    __slots__ = ("field", "ambient_dim", "dim", "basis")

    def __init__(self, field: GF, ambient_dim: int, basis_rows):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis_rows)
        self.dim = len(self.basis)

    def basis_matrix(self) -> MatrixGF:
        return MatrixGF(self.field, self.basis)

    def vectors(self):
        """All q^dim vector codes of the subspace (base-q integer encoding)."""
        q = self.field.order
        if q == 2:
            vecs = [0]
            for row in self.basis:
                packed = _pack_row(row)
                vecs += [v ^ packed for v in vecs]
            return vecs
        f = self.field
        vecs = [(0,) * self.ambient_dim]
        for row in self.basis:
            scaled = [
                tuple(f.mul(c, x) for x in row) for c in range(q)
            ]
            vecs = [
                tuple(f.add(a, b) for a, b in zip(v, s)) for v in vecs for s in scaled
            ]
        return [encode_vector(v, q) for v in vecs]

    def sort_key(self):
        return (self.dim, self.basis)

    def __lt__(self, other: "Subspace"):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(q={self.field.order}, dim={self.dim}, ambient={self.ambient_dim})"


def subspace_from_rows(m: MatrixGF) -> Subspace:
    """Canonical representative of the row space; rank drops are kept visible."""
    reduced = m.rref()
    basis = [r for r in reduced.rows if any(r)]
    return Subspace(m.field, m.ncols, basis)


def intersection_dim(u: Subspace, v: Subspace) -> int:
    """dim(U) + dim(V) - rank of the stacked bases."""
    if u.ambient_dim != v.ambient_dim or u.field != v.field:
        raise ValueError("subspaces live in different ambient spaces")
    if u.field.order == 2:
        stacked = [_pack_row(r) for r in u.basis] + [_pack_row(r) for r in v.basis]
        r = _rref_bits(stacked, u.ambient_dim)[1]
    else:
        r = _rref_generic(u.field, u.basis + v.basis, u.ambient_dim)[1]
    return u.dim + v.dim - r


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """d(U, V) = dim U + dim V - 2 dim(U cap V); = 2k - 2 dim(U cap V) for equal dims."""
    return u.dim + v.dim - 2 * intersection_dim(u, v)


def enumerate_subspaces(field: GF, ambient_dim: int, dim: int):
    """All dim-dimensional subspaces of GF(q)^ambient_dim, in canonical order.

    Walks RREF bases directly: one basis per subspace, grouped by pivot
    columns, free entries filled in odometer order.
    """
    q = field.order
    n, k = ambient_dim, dim
    if k == 0:
        yield Subspace(field, n, [])
        return
    if k > n:
        return
    for pivots in itertools.combinations(range(n), k):
        free = []
        for r in range(k):
            for c in range(pivots[r] + 1, n):
                if c not in pivots:
                    free.append((r, c))
        for assignment in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), val in zip(free, assignment):
                rows[r][c] = val
            yield Subspace(field, n, rows)
