"""Dense univariate polynomials over GF(q).

Coefficients are stored as canonical element codes in ascending degree, with
trailing zeros stripped; the zero polynomial has no coefficients and degree
``None``.  Products are computed on the digit (GF(p)-vector) form of the
coefficients with numpy convolutions, which keeps repeated powering cheap
at the field sizes used here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import (
    FieldElement,
    FieldMismatch,
    FieldSpec,
    _reduction_matrix,
    add_codes,
    add_table,
    codes_to_digits,
    digits_to_codes,
    mul_codes,
    mul_table,
    neg_code,
)


def _as_code(F: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        return F(c).code
    return int(c) % F.p


def fold_exponent(m: int, q: int) -> int:
    """Exponent of the monomial of degree <= q-1 inducing the same map as x^m."""
    if m < q:
        return m
    return (m - 1) % (q - 1) + 1


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        q = self.field.q
        if any(not 0 <= x < q for x in c):
            raise ValueError(f"coefficient codes must lie in [0, {q - 1}]")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- constructors --

    @classmethod
    def zero(cls, F: FieldSpec) -> Poly:
        return cls(F)

    @classmethod
    def constant(cls, F: FieldSpec, c) -> Poly:
        """Constant polynomial; a plain int n means n * 1 in the prime subfield."""
        return cls(F, (_as_code(F, c),))

    @classmethod
    def x(cls, F: FieldSpec) -> Poly:
        return cls(F, (0, 1))

    @classmethod
    def from_terms(cls, F: FieldSpec, terms, *, reduce: bool = False) -> Poly:
        """Build from (exponent, code) pairs, summing repeats.

        With ``reduce=True`` each exponent is folded first, so huge exponents
        never materialize a dense list.
        """
        acc: dict[int, int] = {}
        for m, c in terms:
            if m < 0:
                raise ValueError("negative exponent")
            c = int(c)
            if reduce:
                m = fold_exponent(m, F.q)
            acc[m] = add_codes(F, acc.get(m, 0), c)
        if not acc:
            return cls(F)
        out = [0] * (max(acc) + 1)
        for m, c in acc.items():
            out[m] = c
        return cls(F, tuple(out))

    @classmethod
    def from_text(cls, F: FieldSpec, text: str) -> Poly:
        text = text.strip()
        if not text:
            return cls(F)
        return cls(F, tuple(int(t) for t in text.split(",")))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    # -- basic queries --

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i] if i < len(self.coeffs) else 0)

    def exponents(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __repr__(self):
        return f"Poly({self.field!r}, [{self.to_text()}])"

    # -- ring operations --

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add_codes(F, out[i], c)
        return Poly(F, tuple(out))

    def __neg__(self) -> Poly:
        return Poly(self.field, tuple(neg_code(self.field, c) for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F)
        return Poly(F, tuple(_mul_dense(F, self.coeffs, other.coeffs).tolist()))

    def scale(self, c) -> Poly:
        F = self.field
        c = _as_code(F, c)
        return Poly(F, tuple(mul_codes(F, c, a) for a in self.coeffs))

    def __call__(self, x) -> FieldElement:
        return evaluate(self, x)


def _mul_dense(F: FieldSpec, a, b) -> np.ndarray:
    """Product of two coefficient-code sequences, as a code array."""
    p, e = F.p, F.e
    if e == 1:
        return np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % p
    da = codes_to_digits(F, a)
    db = codes_to_digits(F, b)
    n = len(a) + len(b) - 1
    prod = np.zeros((n, 2 * e - 1), dtype=np.int64)
    for i in range(e):
        if not da[:, i].any():
            continue
        for j in range(e):
            prod[:, i + j] += np.convolve(da[:, i], db[:, j])
    return digits_to_codes(F, (prod % p) @ _reduction_matrix(F))


# -- module-level operations --

def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def scale(c: FieldElement, f: Poly) -> Poly:
    return f.scale(c)


def degree(f: Poly) -> int | None:
    return f.degree


def reduce_mod_qx(f: Poly) -> Poly:
    """Reduce modulo x^q - x by folding every exponent m >= q into [1, q-1]."""
    F = f.field
    q = F.q
    if len(f.coeffs) <= q:
        return f
    c = np.asarray(f.coeffs, dtype=np.int64)
    exps = np.arange(len(c), dtype=np.int64)
    folded = np.where(exps < q, exps, (exps - 1) % (q - 1) + 1)
    nz = c != 0
    digits = codes_to_digits(F, c[nz])
    acc = np.zeros((q, F.e), dtype=np.int64)
    np.add.at(acc, folded[nz], digits)
    return Poly(F, tuple(digits_to_codes(F, acc).tolist()))


def mul_mod_qx(f: Poly, g: Poly) -> Poly:
    return reduce_mod_qx(f * g)


def pow_mod(f: Poly, s: int) -> Poly:
    """f^s reduced modulo x^q - x (square-and-multiply, reducing after each product)."""
    if s < 0:
        raise ValueError("exponent must be non-negative")
    F = f.field
    result = Poly(F, (1,))
    base = reduce_mod_qx(f)
    while s:
        if s & 1:
            result = mul_mod_qx(result, base)
        s >>= 1
        if s:
            base = mul_mod_qx(base, base)
    return result


def evaluate(f: Poly, x) -> FieldElement:
    """Horner evaluation of f at x (polynomials of degree >= q are folded first)."""
    F = f.field
    if isinstance(x, FieldElement):
        if x.field != F:
            raise FieldMismatch(f"{x.field!r} vs {F!r}")
        x = x.code
    elif not 0 <= x < F.q:
        raise ValueError(f"element code {x} out of range")
    coeffs = reduce_mod_qx(f).coeffs
    acc = 0
    for c in reversed(coeffs):
        acc = add_codes(F, mul_codes(F, acc, x), c)
    return FieldElement(F, acc)


def evaluate_all(f: Poly) -> np.ndarray:
    """Images of every element of the field, indexed by element code."""
    F = f.field
    q = F.q
    coeffs = reduce_mod_qx(f).coeffs
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    if not coeffs:
        return acc
    mt = mul_table(F)
    at = add_table(F)
    for c in reversed(coeffs):
        acc = at[mt[acc, xs], c]
    return acc
