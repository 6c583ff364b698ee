"""Permutation tests for polynomials over GF(q).

Three independent testers: exhaustive evaluation, Hermite's criterion, and
the multiplicative criterion for f(x) = x^r h(x^((q-1)/d)).  Negative
verdicts carry a witness that `revalidate` can check again from scratch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import CapExceeded, FieldSpec, mu_subgroup, mul_codes, pow_code
from .poly import Poly, evaluate, evaluate_all, mul_mod_qx, pow_mod, reduce_mod_qx

HERMITE_Q_CAP = 343

WITNESS_KINDS = ("collision", "hermite_i", "hermite_ii", "gcd", "mu_escape", "mu_collision")


@dataclass(frozen=True)
class Witness:
    """Certificate of non-permutation.

    ``data`` by kind:
      collision     (x1, x2) with x1 < x2 and f(x1) == f(x2)
      hermite_i     (q-1, degree of f^(q-1) mod x^q - x or -1 for zero)
      hermite_ii    (s, degree of f^s mod x^q - x)
      gcd           (r, (q-1)/d, gcd)
      mu_escape     (y, image) with y in mu_d and image outside mu_d
      mu_collision  (y1, y2, image)
    """

    kind: str
    data: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "data": list(self.data)}

    def to_text(self) -> str:
        return f"{self.kind}:" + ";".join(str(v) for v in self.data)


@dataclass(frozen=True)
class Verdict:
    is_permutation: bool
    witness: Witness | None = None

    def __post_init__(self):
        if not self.is_permutation and self.witness is None:
            raise ValueError("negative verdict needs a witness")

    def to_json(self) -> dict:
        return {
            "is_permutation": self.is_permutation,
            "witness": self.witness.to_json() if self.witness else None,
        }


PERMUTATION = Verdict(True)


@dataclass(frozen=True)
class MultiplicativeForm:
    """f(x) = x^r * h(x^((q-1)/d))."""

    r: int
    d: int
    h: Poly

    def expand(self) -> Poly:
        F = self.h.field
        m = (F.q - 1) // self.d
        terms = [(self.r + m * i, c) for i, c in enumerate(self.h.coeffs) if c]
        return Poly.from_terms(F, terms, reduce=True)


def brute_force_check(f: Poly, F: FieldSpec | None = None) -> Verdict:
    """Evaluate f on every element; report the first collision in code order."""
    F = F or f.field
    if f.field != F:
        raise ValueError("polynomial is over a different field")
    images = evaluate_all(f).tolist()
    seen: dict[int, int] = {}
    for x, y in enumerate(images):
        if y in seen:
            return Verdict(False, Witness("collision", (seen[y], x)))
        seen[y] = x
    return PERMUTATION


def _deg(f: Poly) -> int:
    return -1 if f.degree is None else f.degree


def hermite_check(f: Poly, F: FieldSpec | None = None, *, q_cap: int = HERMITE_Q_CAP) -> Verdict:
    """Hermite's criterion with condition (ii) over every s in 1..q-2."""
    F = F or f.field
    q = F.q
    if q > q_cap:
        raise CapExceeded(f"q = {q} exceeds the Hermite cap {q_cap}")
    base = reduce_mod_qx(f)
    power = base
    for s in range(1, q - 1):
        if s > 1:
            power = mul_mod_qx(power, base)
        if _deg(power) > q - 2:
            return Verdict(False, Witness("hermite_ii", (s, _deg(power))))
    power = mul_mod_qx(power, base)
    if _deg(power) != q - 1:
        return Verdict(False, Witness("hermite_i", (q - 1, _deg(power))))
    return PERMUTATION


def _mu_map(mf: MultiplicativeForm, y: int) -> int:
    F = mf.h.field
    m = (F.q - 1) // mf.d
    hy = evaluate(mf.h, y).code
    return mul_codes(F, pow_code(F, y, mf.r), pow_code(F, hy, m))


def zieve_check(mf: MultiplicativeForm, F: FieldSpec | None = None) -> Verdict:
    """Multiplicative criterion: gcd(r, (q-1)/d) == 1 and y -> y^r h(y)^((q-1)/d) permutes mu_d."""
    F = F or mf.h.field
    q = F.q
    if mf.d < 1 or (q - 1) % mf.d:
        raise ValueError(f"d = {mf.d} does not divide q - 1 = {q - 1}")
    if mf.r < 1:
        raise ValueError("r must be positive")
    if mf.h.field != F:
        raise ValueError("h is over a different field")
    m = (q - 1) // mf.d
    g = math.gcd(mf.r, m)
    if g != 1:
        return Verdict(False, Witness("gcd", (mf.r, m, g)))
    mu = sorted(y.code for y in mu_subgroup(F, mf.d))
    mu_set = set(mu)
    seen: dict[int, int] = {}
    for y in mu:
        image = _mu_map(mf, y)
        if image not in mu_set:
            return Verdict(False, Witness("mu_escape", (y, image)))
        if image in seen:
            return Verdict(False, Witness("mu_collision", (seen[image], y, image)))
        seen[image] = y
    return PERMUTATION


def decompose_multiplicative(f: Poly, d: int, F: FieldSpec | None = None) -> MultiplicativeForm | None:
    """Write f = x^r h(x^((q-1)/d)) with the smallest r >= 1, or return None."""
    F = F or f.field
    q = F.q
    if d < 1 or (q - 1) % d:
        raise ValueError(f"d = {d} does not divide q - 1 = {q - 1}")
    m = (q - 1) // d
    exps = f.exponents()
    if not exps:
        return MultiplicativeForm(1, d, Poly(F))
    r = (min(exps) - 1) % m + 1
    if min(exps) < r or any((x - r) % m for x in exps):
        return None
    terms = [((x - r) // m, f.coeffs[x]) for x in exps]
    return MultiplicativeForm(r, d, Poly.from_terms(F, terms))


def revalidate(f: Poly, verdict: Verdict, mf: MultiplicativeForm | None = None) -> bool:
    """Re-check a negative verdict's witness independently of the tester that produced it."""
    if verdict.is_permutation:
        return True
    w = verdict.witness
    F = f.field
    q = F.q
    if w.kind == "collision":
        x1, x2 = w.data
        return x1 != x2 and evaluate(f, x1) == evaluate(f, x2)
    if w.kind == "hermite_ii":
        s = w.data[0]
        return 1 <= s <= q - 2 and _deg(pow_mod(f, s)) > q - 2
    if w.kind == "hermite_i":
        return _deg(pow_mod(f, q - 1)) != q - 1
    if mf is None:
        raise ValueError(f"{w.kind} witness needs the multiplicative form")
    if w.kind == "gcd":
        return math.gcd(mf.r, (q - 1) // mf.d) != 1
    mu = {y.code for y in mu_subgroup(F, mf.d)}
    if w.kind == "mu_escape":
        y, _ = w.data
        return y in mu and _mu_map(mf, y) not in mu
    if w.kind == "mu_collision":
        y1, y2, _ = w.data
        return y1 != y2 and {y1, y2} <= mu and _mu_map(mf, y1) == _mu_map(mf, y2)
    raise ValueError(f"unknown witness kind {w.kind!r}")
