"""Exact arithmetic in GF(q) for prime powers q, and in extensions GF(q^n).

Field elements are plain Python ints.  In GF(p^m) the base-p digits of the
integer are the coefficients of the residue polynomial, lowest degree first.
In GF(q^n) over GF(q) the base-q digits are the coordinates with respect to
the power basis (1, alpha, ..., alpha^(n-1)).  With these encodings 0 and 1
are always the additive and multiplicative identities, and for p = 2
addition of any two elements is XOR of their codes.

Moduli are chosen deterministically: the lexicographically smallest monic
irreducible polynomial, comparing coefficient tuples low degree first.  Two
runs (or two machines) therefore agree on every element code and every
multiplication table.

Multiplication uses precomputed log/antilog tables for fields of up to
2^16 elements; larger fields (allowed up to 2^20) fall back to polynomial
multiplication per operation.  Field objects are immutable after
construction and all operations are pure, so they can be shared freely
across threads.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

TABLE_LIMIT = 1 << 16
ORDER_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with q = p^m, p prime.  Raises if q is not a prime power."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = 2
    while q % p != 0:
        p += 1
        if p * p > q:
            p = q
            break
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1 or not is_prime(p):
        raise ValueError(f"not a prime power: {q}")
    return p, m


# ----------------------------------------------------------------------
# Polynomials over a field object.  Coefficient lists are low degree
# first, entries are element codes of the coefficient field.
# ----------------------------------------------------------------------

def _poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _poly_trim(out)


def _poly_rem(F, num, den):
    num = list(num)
    dn = len(den) - 1
    inv_lead = F.inv(den[-1])
    while len(num) - 1 >= dn and num:
        if num[-1] == 0:
            num.pop()
            continue
        factor = F.mul(num[-1], inv_lead)
        shift = len(num) - 1 - dn
        for i, dc in enumerate(den):
            if dc:
                num[shift + i] = F.sub(num[shift + i], F.mul(factor, dc))
        num.pop()
    return _poly_trim(num)


def _monic_polys(F, degree):
    for tail in itertools.product(range(F.order), repeat=degree):
        yield list(tail) + [1]


def _poly_is_irreducible(F, cs) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    cs = _poly_trim(cs)
    deg = len(cs) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if cs[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for div in _monic_polys(F, d):
            if not _poly_rem(F, cs, div):
                return False
    return True


def smallest_irreducible(F, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of the given degree over F."""
    for tail in itertools.product(range(F.order), repeat=degree):
        cand = list(tail) + [1]
        if _poly_is_irreducible(F, cand):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {degree} found (internal bug)")


def _digits(value: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        value, r = divmod(value, base)
        out.append(r)
    return tuple(out)


def _undigits(digits, base: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * base + d
    return out


def _digit_add(a: int, b: int, p: int) -> int:
    """Digitwise addition mod p of the base-p expansions (carry-free)."""
    if p == 2:
        return a ^ b
    out, shift = 0, 1
    while a or b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        out += ((da + db) % p) * shift
        shift *= p
    return out


def _digit_neg(a: int, p: int) -> int:
    if p == 2:
        return a
    out, shift = 0, 1
    while a:
        a, da = divmod(a, p)
        out += ((p - da) % p) * shift
        shift *= p
    return out


def _pow_raw(field, a: int, e: int) -> int:
    """Square-and-multiply on top of _mul_raw; usable before log tables exist."""
    out, base = 1, a
    while e:
        if e & 1:
            out = field._mul_raw(out, base)
        base = field._mul_raw(base, base)
        e >>= 1
    return out


def _find_generator(field) -> int:
    """Smallest code that generates the multiplicative group."""
    n1 = field.order - 1
    factors = set()
    rest, f = n1, 2
    while f * f <= rest:
        while rest % f == 0:
            factors.add(f)
            rest //= f
        f += 1
    if rest > 1:
        factors.add(rest)
    for g in range(2, field.order):
        if all(_pow_raw(field, g, n1 // ell) != 1 for ell in factors):
            return g
    if field.order == 2:
        return 1
    raise RuntimeError("no multiplicative generator found (internal bug)")


def _build_log_tables(field):
    g = _find_generator(field)
    n1 = field.order - 1
    exp = [1] * n1
    log = [0] * field.order
    x = 1
    for i in range(n1):
        exp[i] = x
        log[x] = i
        x = field._mul_raw(x, g)
    return exp, log


class GF:
    """The finite field GF(p^m) with integer-coded elements.

    Elements are ints in [0, p^m); the base-p digits are the polynomial
    coefficients, lowest degree first, so 0 and 1 are the identities and
    the code p represents the residue class of x.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if not 1 <= m <= 4:
            raise ValueError(f"extension degree m = {m} outside supported range 1..4")
        self.p = p
        self.m = m
        self.q = p ** m
        self.order = self.q
        if m == 1:
            self.modulus = (0, 1) if modulus is None else tuple(modulus)
            if len(self.modulus) != 2 or self.modulus[1] != 1:
                raise ValueError("prime-field modulus must be monic of degree 1")
            self._exp = self._log = None
        else:
            fp = prime_field(p)
            if modulus is None:
                modulus = smallest_irreducible(fp, m)
            modulus = tuple(modulus)
            if len(modulus) != m + 1 or modulus[m] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not all(0 <= c < p for c in modulus):
                raise ValueError("modulus coefficients must be reduced mod p")
            if not _poly_is_irreducible(fp, list(modulus)):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
            self._exp, self._log = _build_log_tables(self)

    # -- raw arithmetic used while bootstrapping the log tables --

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        pa = _digits(a, self.p, self.m)
        pb = _digits(b, self.p, self.m)
        fp = prime_field(self.p)
        prod = _poly_mul(fp, list(pa), list(pb))
        prod = _poly_rem(fp, prod, list(self.modulus))
        prod += [0] * (self.m - len(prod))
        return _undigits(prod, self.p)

    # -- public arithmetic on element codes --

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return _digit_add(a, b, self.p)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return _digit_neg(a, self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in GF(q)")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def elements(self) -> range:
        return range(self.order)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def descriptor(self) -> dict:
        """Serializable description: {p, m, modulus}."""
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_descriptor(cls, desc: dict) -> "GF":
        return cls(desc["p"], desc["m"], tuple(desc["modulus"]))

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


class GFExtension:
    """GF(q^n) as a vector space over a base GF(q), with the power basis.

    Codes are ints in [0, q^n); the base-q digits are the coordinates over
    the base field, so to_vector/from_vector are trivial re-encodings and
    the code q**i represents the basis element alpha^i.
    """

    def __init__(self, base: GF, n: int, modulus=None):
        if n < 1:
            raise ValueError("extension degree n must be >= 1")
        self.base = base
        self.n = n
        self.q = base.order
        self.order = self.q ** n
        if self.order > ORDER_LIMIT:
            raise ValueError(f"field order {self.q}^{n} exceeds supported limit 2^20")
        if modulus is None:
            modulus = smallest_irreducible(base, n)
        modulus = tuple(modulus)
        if len(modulus) != n + 1 or modulus[n] != 1:
            raise ValueError(f"modulus must be monic of degree {n}")
        if not _poly_is_irreducible(base, list(modulus)):
            raise ValueError(f"modulus {modulus} is reducible over {base!r}")
        self.modulus = modulus
        if self.order <= TABLE_LIMIT:
            self._exp, self._log = _build_log_tables(self)
            # x -> x^q as a permutation table for fast q-power iteration
            n1 = self.order - 1
            self._frob = [0] + [
                self._exp[(self._log[x] * self.q) % n1] for x in range(1, self.order)
            ]
        else:
            self._exp = self._log = None
            self._frob = None

    def _mul_raw(self, a: int, b: int) -> int:
        pa = list(_digits(a, self.q, self.n))
        pb = list(_digits(b, self.q, self.n))
        prod = _poly_mul(self.base, pa, pb)
        prod = _poly_rem(self.base, prod, list(self.modulus))
        prod += [0] * (self.n - len(prod))
        return _undigits(prod, self.q)

    def _pow_nolog(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def add(self, a: int, b: int) -> int:
        return _digit_add(a, b, self.base.p)

    def neg(self, a: int) -> int:
        return _digit_neg(a, self.base.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in GF(q^n)")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._pow_nolog(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a != 0 and self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        return self._pow_nolog(a, e)

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); the i-fold Frobenius over the base field."""
        if i < 0:
            raise ValueError("Frobenius iteration count must be >= 0")
        for _ in range(i % self.n):
            a = self._frob[a] if self._frob is not None else self._pow_nolog(a, self.q)
        return a

    def to_vector(self, a: int) -> tuple[int, ...]:
        """Coordinates of a over the base field, length n."""
        return _digits(a, self.q, self.n)

    def from_vector(self, coords) -> int:
        coords = tuple(coords)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        if not all(0 <= c < self.q for c in coords):
            raise ValueError("coordinates out of range for the base field")
        return _undigits(coords, self.q)

    def elements(self) -> range:
        return range(self.order)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def __eq__(self, other):
        return (
            isinstance(other, GFExtension)
            and self.base == other.base
            and (self.n, self.modulus) == (other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.base, self.n, self.modulus))

    def __repr__(self):
        return f"GF({self.q}^{self.n})/{self.base!r}"


class FieldElement:
    """Convenience wrapper pairing a code with its field; hot paths use raw ints."""

    __slots__ = ("field", "value")

    def __init__(self, field, value: int):
        if not 0 <= value < field.order:
            raise ValueError(f"code {value} out of range for {field!r}")
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed fields in arithmetic")
            return other.value
        value = int(other)
        if not 0 <= value < self.field.order:
            raise ValueError(f"code {value} out of range for {self.field!r}")
        return value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field!r}[{self.value}]"


@lru_cache(maxsize=None)
def prime_field(p: int) -> GF:
    return GF(p, 1)


@lru_cache(maxsize=None)
def field_of_order(q: int) -> GF:
    """The canonical GF(q) for a prime power q (deterministic modulus)."""
    p, m = factor_prime_power(q)
    return GF(p, m)


@lru_cache(maxsize=None)
def extension_field(q: int, n: int) -> GFExtension:
    """The canonical GF(q^n) over field_of_order(q)."""
    return GFExtension(field_of_order(q), n)
