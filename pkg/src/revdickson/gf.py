"""Arithmetic in GF(p) and GF(p^e) for odd p.

An element of GF(p^e) is a vector of e residues mod p, the coefficients of
1, t, ..., t^(e-1) where t is a root of the field modulus.  Elements are
identified with their canonical integer code sum(c_i * p^i), so the prime
subfield element c has code c.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np


class CapExceeded(ValueError):
    """Raised when a computation would exceed a configured field-size cap."""


class FieldMismatch(ValueError):
    """Raised when operands live in different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# -- polynomials over GF(p) as ascending int lists (modulus handling only) --

def _strip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a, b, p):
    """Remainder of a by monic b over GF(p)."""
    r = [x % p for x in a]
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _strip(r[:db])


def _monic_polys(p, degree):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(c, p: int) -> bool:
    """True iff the monic polynomial ``c`` (ascending coefficients) is irreducible over GF(p).

    Trial division by every monic polynomial of degree 1..deg//2.
    """
    c = [x % p for x in c]
    c = _strip(c)
    if len(c) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if c[-1] != 1:
        raise ValueError("polynomial must be monic")
    deg = len(c) - 1
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_rem(c, g, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e, as (c0, ..., c_{e-1}, 1)."""
    for low in itertools.product(range(p), repeat=e):
        c = list(low) + [1]
        if is_irreducible(c, p):
            return tuple(c)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^e) = GF(p)[t] / (modulus)."""

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def __call__(self, value) -> FieldElement:
        """Coerce an integer code (or a FieldElement of this field) into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        return FieldElement(self, int(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def modulus_text(self) -> str:
        return ",".join(str(c) for c in self.modulus)


@functools.lru_cache(maxsize=None)
def build_field(p: int, e: int = 1, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Construct GF(p^e).

    ``modulus`` is an ascending coefficient sequence including the leading 1.
    When omitted (and e >= 2) the lexicographically smallest monic
    irreducible of degree e is used.  For e == 1 the modulus is ``x``.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if modulus is None:
        modulus = (0, 1) if e == 1 else smallest_irreducible(p, e)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(_strip(modulus)) != e + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {e}")
        if e > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
    return FieldSpec(p, e, tuple(modulus))


# -- code <-> digit conversions and scalar arithmetic on codes --

@functools.lru_cache(maxsize=None)
def _reduction_matrix(F: FieldSpec) -> np.ndarray:
    """Row s holds the digits of t^s mod the modulus, for s in 0..2e-2."""
    p, e = F.p, F.e
    rows = []
    cur = [0] * e
    cur[0] = 1
    for _ in range(2 * e - 1):
        rows.append(list(cur))
        # multiply by t
        top = cur[-1]
        cur = [0] + cur[:-1]
        if e == 1:
            cur = [0]
        for i in range(e):
            cur[i] = (cur[i] - top * F.modulus[i]) % p
    return np.array(rows, dtype=np.int64)


def to_digits(F: FieldSpec, code: int) -> tuple[int, ...]:
    out = []
    for _ in range(F.e):
        code, r = divmod(code, F.p)
        out.append(r)
    return tuple(out)


def from_digits(F: FieldSpec, digits) -> int:
    code = 0
    for d in reversed(list(digits)):
        code = code * F.p + (int(d) % F.p)
    return code


def codes_to_digits(F: FieldSpec, codes) -> np.ndarray:
    """(n,) array of codes -> (n, e) digit array."""
    codes = np.asarray(codes, dtype=np.int64)
    powers = F.p ** np.arange(F.e, dtype=np.int64)
    return (codes[..., None] // powers) % F.p


def digits_to_codes(F: FieldSpec, digits: np.ndarray) -> np.ndarray:
    powers = F.p ** np.arange(F.e, dtype=np.int64)
    return (np.asarray(digits, dtype=np.int64) % F.p) @ powers


def add_codes(F: FieldSpec, a: int, b: int) -> int:
    if F.e == 1:
        return (a + b) % F.p
    p = F.p
    out, scale = 0, 1
    for _ in range(F.e):
        out += ((a % p + b % p) % p) * scale
        a //= p
        b //= p
        scale *= p
    return out


def neg_code(F: FieldSpec, a: int) -> int:
    if F.e == 1:
        return -a % F.p
    return from_digits(F, [-d for d in to_digits(F, a)])


def mul_codes(F: FieldSpec, a: int, b: int) -> int:
    p, e = F.p, F.e
    if e == 1:
        return a * b % p
    da, db = to_digits(F, a), to_digits(F, b)
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] += x * y
    red = _reduction_matrix(F)
    out = [0] * e
    for s, c in enumerate(prod):
        if c:
            row = red[s]
            for i in range(e):
                out[i] += c * int(row[i])
    return from_digits(F, out)


def pow_code(F: FieldSpec, a: int, m: int) -> int:
    if m < 0:
        raise ValueError("negative exponent")
    result = 1
    while m:
        if m & 1:
            result = mul_codes(F, result, a)
        a = mul_codes(F, a, a)
        m >>= 1
    return result


def inv_code(F: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    if F.e == 1:
        return pow(a, -1, F.p)
    return pow_code(F, a, F.q - 2)


@functools.lru_cache(maxsize=16)
def mul_table(F: FieldSpec) -> np.ndarray:
    """Full q x q multiplication table of codes."""
    q = F.q
    codes = np.arange(q, dtype=np.int64)
    if F.e == 1:
        return np.outer(codes, codes) % F.p
    d = codes_to_digits(F, codes)
    e = F.e
    prod = np.zeros((q, q, 2 * e - 1), dtype=np.int64)
    for i in range(e):
        for j in range(e):
            prod[:, :, i + j] += np.outer(d[:, i], d[:, j])
    red = _reduction_matrix(F)
    return digits_to_codes(F, (prod @ red) % F.p)


@functools.lru_cache(maxsize=16)
def add_table(F: FieldSpec) -> np.ndarray:
    d = codes_to_digits(F, np.arange(F.q))
    return digits_to_codes(F, d[:, None, :] + d[None, :, :])


# -- public element type --

@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise ValueError(f"code {self.code} out of range for {self.field!r}")

    @classmethod
    def from_coeffs(cls, F: FieldSpec, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) != F.e or any(not 0 <= c < F.p for c in coeffs):
            raise ValueError(f"expected {F.e} residues mod {F.p}, got {coeffs}")
        return cls(F, from_digits(F, coeffs))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return to_digits(self.field, self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, add_codes(self.field, self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, neg_code(self.field, self.code))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self + FieldElement(self.field, neg_code(self.field, b))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, mul_codes(self.field, self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.field, inv_code(self.field, b))

    def __pow__(self, m: int):
        if m < 0:
            return self.inverse() ** (-m)
        return FieldElement(self.field, pow_code(self.field, self.code, m))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, inv_code(self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __str__(self):
        return str(self.code)

    def __repr__(self):
        return f"{self.code} in {self.field!r}"


def _check_same(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a + b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, m: int) -> FieldElement:
    """a**m by square-and-multiply; power(0, 0) is 1."""
    if m < 0:
        raise ValueError("exponent must be non-negative")
    return a ** m


def enumerate_elements(F: FieldSpec) -> list[FieldElement]:
    return [FieldElement(F, c) for c in range(F.q)]


@functools.lru_cache(maxsize=256)
def mu_subgroup(F: FieldSpec, d: int) -> frozenset[FieldElement]:
    """The d-th roots of unity in F (requires d | q-1)."""
    if d < 1 or (F.q - 1) % d:
        raise ValueError(f"{d} does not divide q - 1 = {F.q - 1}")
    return frozenset(
        FieldElement(F, c) for c in range(1, F.q) if pow_code(F, c, d) == 1
    )
