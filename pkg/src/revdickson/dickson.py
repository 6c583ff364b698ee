"""Reversed Dickson polynomials of the (k+1)-th kind.

    D_{n,k}(a, x) = sum_{i=0}^{n//2} (n - k i)/(n - i) * C(n-i, i) * (-x)^i * a^(n-2i),
    D_{0,k}(a, x) = 2 - k.

The fractional coefficient is an integer; we use

    (n - k i)/(n - i) * C(n-i, i) = C(n-i, i) - (k-1) * C(n-i-1, i-1)

so nothing is ever divided mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gf import FieldElement, FieldSpec, mul_codes, pow_code
from .poly import Poly, evaluate, pow_mod


@dataclass(frozen=True)
class DicksonParams:
    n: int
    k: int
    a: int = 1  # element code of the first argument


def check_kind(k: int, p: int):
    if not 0 <= k <= p - 1:
        raise ValueError(f"k = {k} outside [0, {p - 1}]")


def integer_coefficient(n: int, k: int, i: int) -> int:
    """Exact integer coefficient of (-x)^i a^(n-2i) in D_{n,k}, for n >= 1."""
    if i < 0 or 2 * i > n:
        return 0
    tail = math.comb(n - i - 1, i - 1) if i >= 1 else 0
    return math.comb(n - i, i) - (k - 1) * tail


def _binom_table(p: int) -> np.ndarray:
    t = np.zeros((p, p), dtype=np.int64)
    for m in range(p):
        for j in range(m + 1):
            t[m, j] = math.comb(m, j) % p
    return t


def binom_mod_p(m, j, p: int) -> np.ndarray:
    """C(m, j) mod p elementwise, by base-p digits (zero where j < 0 or j > m)."""
    m = np.array(m, dtype=np.int64, copy=True)
    j = np.array(j, dtype=np.int64, copy=True)
    out = np.where((j >= 0) & (j <= m), 1, 0).astype(np.int64)
    j = np.maximum(j, 0)
    table = _binom_table(p)
    while m.any():
        out = out * table[m % p, j % p] % p
        m //= p
        j //= p
    return out


def coefficients_mod_p(n: int, k: int, p: int) -> np.ndarray:
    """c_i mod p for i = 0..n//2 (n >= 1)."""
    i = np.arange(n // 2 + 1, dtype=np.int64)
    c = binom_mod_p(n - i, i, p) - (k - 1) * binom_mod_p(n - i - 1, i - 1, p)
    return c % p


def dickson_poly(P: DicksonParams, F: FieldSpec) -> Poly:
    """D_{n,k}(a, x) over F, unreduced (degree <= n//2)."""
    p = F.p
    n, k = P.n, P.k
    check_kind(k, p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Poly.constant(F, 2 - k)
    c = coefficients_mod_p(n, k, p)
    signs = np.where(np.arange(len(c)) % 2 == 1, -1, 1)
    c = (c * signs) % p
    a = F(P.a).code
    if a == 1:
        return Poly(F, tuple(c.tolist()))
    # c_i are prime-field residues, so their codes equal their values
    out = []
    for i, ci in enumerate(c.tolist()):
        out.append(mul_codes(F, ci, pow_code(F, a, n - 2 * i)) if ci else 0)
    return Poly(F, tuple(out))


def dickson_eval(P: DicksonParams, F: FieldSpec, x) -> FieldElement:
    return evaluate(dickson_poly(P, F), x)


def result1_closed_form(F: FieldSpec) -> Poly:
    """(1/2)(1 - 4x)^((q+1)/2) - x + 1/2, reduced modulo x^q - x."""
    half = F.one / 2
    base = Poly(F, (1, (-4) % F.p))
    body = pow_mod(base, (F.q + 1) // 2).scale(half)
    return body + Poly(F, (half.code, (-1) % F.p))
