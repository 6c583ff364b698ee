"""Polynomial families from the reversed Dickson classification and their verifiers.

Each verifier cell builds one polynomial over GF(p^e), decides whether it
permutes the field by exhaustive evaluation, and compares that with a
closed-form prediction (or with the verdict of a paired polynomial, for the
equivalence statements).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dickson import DicksonParams, check_kind, dickson_poly, result1_closed_form
from .gf import CapExceeded, FieldSpec, build_field
from .poly import Poly, evaluate_all
from .ppcheck import Verdict, Witness, brute_force_check

BRUTE_Q_CAP = 343

FAMILIES = ("trinomial", "binomial_p3", "binomial_k4", "dickson_n_pl2", "result1")
THEOREMS = ("thm3.1", "thm4.1", "result1", "result2", "result3", "result4")

DEFAULT_PRIMES = (5, 7, 11, 13)


@dataclass(frozen=True)
class FamilyParams:
    p: int
    e: int
    l: int
    k: int

    def key(self):
        return (self.p, self.e, self.l, self.k)


@dataclass(frozen=True)
class TheoremReport:
    params: FamilyParams
    family: str
    predicted: bool
    observed: bool
    witness: Witness | None = None

    @property
    def agree(self) -> bool:
        return self.predicted == self.observed

    def to_row(self) -> dict:
        p = self.params
        return {
            "p": p.p,
            "e": p.e,
            "l": p.l,
            "k": p.k,
            "family": self.family,
            "predicted": self.predicted,
            "observed": self.observed,
            "agree": self.agree,
            "witness": self.witness.to_json() if self.witness else None,
        }


def _field(params: FamilyParams) -> FieldSpec:
    return build_field(params.p, params.e)


def _require_field(params: FamilyParams, F: FieldSpec | None) -> FieldSpec:
    if F is None:
        return _field(params)
    if (F.p, F.e) != (params.p, params.e):
        raise ValueError(f"{F!r} does not match p={params.p}, e={params.e}")
    return F


# -- family constructors --

def trinomial(params: FamilyParams, F: FieldSpec | None = None) -> Poly:
    """(4-k) x^((p^l+1)/2) + k x^((p^l-1)/2) + (2-k) x, reduced mod x^q - x."""
    F = _require_field(params, F)
    p, l, k = params.p, params.l, params.k
    check_kind(k, p)
    if p <= 3:
        raise ValueError("trinomial family needs p > 3")
    if k in (0, 2, 4):
        raise ValueError(f"trinomial family excludes k = {k}")
    big = p ** l
    terms = [((big + 1) // 2, (4 - k) % p), ((big - 1) // 2, k % p), (1, (2 - k) % p)]
    return Poly.from_terms(F, terms, reduce=True)


def binomial_p3(l: int, F: FieldSpec) -> Poly:
    """x^((3^l-1)/2) + x over GF(3^e), reduced."""
    if F.p != 3:
        raise ValueError("binomial_p3 needs characteristic 3")
    if l < 0:
        raise ValueError("l must be non-negative")
    return Poly.from_terms(F, [((3 ** l - 1) // 2, 1), (1, 1)], reduce=True)


def binomial_k4(params: FamilyParams, F: FieldSpec | None = None) -> Poly:
    """x^((p^l-1)/2) - x/2, reduced."""
    F = _require_field(params, F)
    if params.p <= 3:
        raise ValueError("binomial_k4 needs p > 3")
    minus_half = (-(F.one / 2)).code
    return Poly.from_terms(F, [((params.p ** params.l - 1) // 2, 1), (1, minus_half)], reduce=True)


def dickson_n_pl2(params: FamilyParams, F: FieldSpec | None = None) -> Poly:
    """D_{p^l+2, k}(1, x)."""
    F = _require_field(params, F)
    return dickson_poly(DicksonParams(params.p ** params.l + 2, params.k), F)


# -- predictors --

def predict_trinomial_pp(params: FamilyParams) -> bool:
    if params.p <= 3 or params.k in (0, 2, 4):
        raise ValueError("trinomial family needs p > 3 and k not in {0, 2, 4}")
    check_kind(params.k, params.p)
    return params.l == 0 and params.k != 3


def predict_binomial_pp_p3(e: int, l: int) -> bool:
    if l == 0:
        return True
    return l >= 1 and (l - 1) % e == 0 and ((l - 1) // e) % 2 == 0


def predict_result1_pp(F: FieldSpec) -> bool:
    return F.q % 3 == 1


def result1_mismatches(F: FieldSpec) -> list[int]:
    """Elements where D_{q+2,0}(1, x) and the closed form disagree."""
    d = evaluate_all(dickson_poly(DicksonParams(F.q + 2, 0), F))
    c = evaluate_all(result1_closed_form(F))
    return [int(x) for x in (d != c).nonzero()[0]]


# -- cell verification --

def family_poly(params: FamilyParams, family: str) -> Poly:
    """The polynomial whose permutation behaviour a cell observes."""
    F = _field(params)
    if family == "trinomial":
        return trinomial(params, F)
    if family == "binomial_p3":
        return binomial_p3(params.l, F)
    if family == "binomial_k4":
        if params.k != 4:
            raise ValueError("binomial_k4 cells need k = 4")
        return binomial_k4(params, F)
    if family == "dickson_n_pl2":
        return dickson_n_pl2(params, F)
    if family == "result1":
        if params.k != 0 or params.l != params.e:
            raise ValueError("result1 cells need k = 0 and l = e")
        return dickson_poly(DicksonParams(F.q + 2, 0), F)
    raise ValueError(f"unknown family {family!r}")


def _predict(params: FamilyParams, family: str, F: FieldSpec) -> bool:
    p, e, l, k = params.key()
    if family == "trinomial":
        return predict_trinomial_pp(params)
    if family == "binomial_p3":
        if p != 3:
            raise ValueError("binomial_p3 needs p = 3")
        return predict_binomial_pp_p3(e, l)
    if family == "binomial_k4":
        return brute_force_check(dickson_n_pl2(FamilyParams(p, e, l, 4), F)).is_permutation
    if family == "result1":
        return predict_result1_pp(F)
    if family == "dickson_n_pl2":
        check_kind(k, p)
        if k == 2:
            return l == 0
        if k == 4:
            return brute_force_check(binomial_k4(params, F)).is_permutation
        if k == 0:
            if l != e:
                raise ValueError("k = 0 is only classified for l = e")
            return predict_result1_pp(F)
        if p == 3:
            return brute_force_check(binomial_p3(l, F)).is_permutation
        return brute_force_check(trinomial(params, F)).is_permutation
    raise ValueError(f"unknown family {family!r}")


def verify_cell(params: FamilyParams, family: str, *, q_cap: int = BRUTE_Q_CAP) -> TheoremReport:
    F = _field(params)
    if F.q > q_cap:
        raise CapExceeded(f"q = {F.q} exceeds the brute-force cap {q_cap}")
    predicted = _predict(params, family, F)
    verdict: Verdict = brute_force_check(family_poly(params, family))
    return TheoremReport(params, family, predicted, verdict.is_permutation, verdict.witness)


# -- grids --

def default_ks(family: str, p: int) -> list[int]:
    if family == "trinomial":
        return [k for k in range(p) if k not in (0, 2, 4)]
    if family == "binomial_p3":
        return [1]
    if family == "binomial_k4":
        return [4]
    if family == "result1":
        return [0]
    if family == "dickson_n_pl2":
        return [k for k in range(p) if k not in (0, 2, 4)] if p > 3 else [1]
    raise ValueError(f"unknown family {family!r}")


def default_l_max(family: str, e: int) -> int:
    # cross at least one full folding period of 2e
    return 4 * e + 1 if family == "binomial_p3" else 2 * e + 1


def grid(family: str, p_values, e_values, *, l_max: int | None = None, k_values=None) -> list[FamilyParams]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    cells = []
    for p, e in itertools.product(sorted(p_values), sorted(e_values)):
        ks = sorted(k_values) if k_values is not None else default_ks(family, p)
        if family == "result1":
            ls = [e]
        else:
            ls = range((default_l_max(family, e) if l_max is None else l_max) + 1)
        for l, k in itertools.product(ls, ks):
            cells.append(FamilyParams(p, e, l, k))
    return sorted(cells, key=FamilyParams.key)


def _run_cell(args):
    params, family, q_cap = args
    return verify_cell(params, family, q_cap=q_cap)


def scan(family: str, p_values, e_values, *, l_max: int | None = None, k_values=None,
         q_cap: int = BRUTE_Q_CAP, workers: int = 1) -> list[TheoremReport]:
    """Verify every cell of a (p, e, l, k) grid, in lexicographic order."""
    cells = grid(family, p_values, e_values, l_max=l_max, k_values=k_values)
    for c in cells:
        if c.p ** c.e > q_cap:
            raise CapExceeded(f"q = {c.p ** c.e} exceeds the brute-force cap {q_cap}")
    jobs = [(c, family, q_cap) for c in cells]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_run_cell, jobs, chunksize=4))
    return [_run_cell(j) for j in jobs]


def verify_theorem(name: str, *, p_values=None, e_max: int | None = None, l_max: int | None = None,
                   q_cap: int = BRUTE_Q_CAP, workers: int = 1) -> list[TheoremReport]:
    """Run the named claim over its default grid (overridable)."""
    if name not in THEOREMS:
        raise ValueError(f"unknown theorem {name!r}; expected one of {', '.join(THEOREMS)}")
    if name == "thm4.1":
        es = range(1, (e_max or 4) + 1)
        return scan("binomial_p3", [3], es, l_max=l_max, q_cap=q_cap, workers=workers)
    ps = p_values or DEFAULT_PRIMES
    es = range(1, (e_max or 2) + 1)
    if name == "thm3.1":
        return scan("trinomial", ps, es, l_max=l_max, q_cap=q_cap, workers=workers)
    if name == "result1":
        return scan("result1", ps, es, q_cap=q_cap, workers=workers)
    ks = {"result2": [2], "result3": [4], "result4": None}[name]
    return scan("dickson_n_pl2", ps, es, l_max=l_max, k_values=ks, q_cap=q_cap, workers=workers)
