"""Acceptance criteria, one test per criterion.

All tolerances are exact (zero disagreement).  A pass/fail line per
criterion is printed in the pytest terminal summary.
"""

import functools
import math
import random
import time

from revdickson.dickson import DicksonParams, dickson_poly, result1_closed_form
from revdickson.gf import build_field
from revdickson.poly import Poly, evaluate_all
from revdickson.ppcheck import (
    MultiplicativeForm,
    brute_force_check,
    hermite_check,
    revalidate,
    zieve_check,
)
from revdickson.theorems import (
    FamilyParams,
    binomial_k4,
    binomial_p3,
    predict_binomial_pp_p3,
    trinomial,
)

PRIMES = (5, 7, 11, 13)
SEED = 20240601

# every negative verdict produced by criteria 1-5: (poly, verdict, multiplicative form or None)
NEGATIVES = []


def _note(f, verdict, mf=None):
    if not verdict.is_permutation:
        NEGATIVES.append((f, verdict, mf))
    return verdict


def thm31_cells():
    for p in PRIMES:
        for e in (1, 2):
            for l in range(2 * e + 2):
                for k in range(p):
                    if k not in (0, 2, 4):
                        yield FamilyParams(p, e, l, k)


def dickson_pl2(p, e, l, k):
    return dickson_poly(DicksonParams(p ** l + 2, k), build_field(p, e))


@functools.cache
def criterion1():
    start = time.perf_counter()
    bad = []
    n = 0
    for c in thm31_cells():
        f = trinomial(c)
        v = _note(f, brute_force_check(f))
        n += 1
        if v.is_permutation != (c.l == 0 and c.k != 3):
            bad.append(c)
    return n, bad, time.perf_counter() - start


@functools.cache
def criterion2():
    start = time.perf_counter()
    bad = []
    n = 0
    for e in range(1, 5):
        F = build_field(3, e)
        for l in range(4 * e + 2):
            f = binomial_p3(l, F)
            v = _note(f, brute_force_check(f))
            n += 1
            if v.is_permutation != predict_binomial_pp_p3(e, l):
                bad.append((e, l))
    return n, bad, time.perf_counter() - start


@functools.cache
def criterion3():
    pointwise_bad, verdict_bad = [], []
    for p in PRIMES:
        for e in (1, 2):
            F = build_field(p, e)
            d = dickson_poly(DicksonParams(F.q + 2, 0), F)
            closed = result1_closed_form(F)
            if not (evaluate_all(d) == evaluate_all(closed)).all():
                pointwise_bad.append((p, e))
            v = _note(d, brute_force_check(d))
            _note(closed, brute_force_check(closed))
            if v.is_permutation != (F.q % 3 == 1):
                verdict_bad.append((p, e))
    return pointwise_bad, verdict_bad


@functools.cache
def criterion4():
    bad = {"result2": [], "result3": [], "result4": []}
    n = 0
    for p in PRIMES:
        for e in (1, 2):
            F = build_field(p, e)
            for l in range(2 * e + 2):
                d2 = dickson_pl2(p, e, l, 2)
                if _note(d2, brute_force_check(d2)).is_permutation != (l == 0):
                    bad["result2"].append((p, e, l))
                d4 = dickson_pl2(p, e, l, 4)
                b4 = binomial_k4(FamilyParams(p, e, l, 4), F)
                if _note(d4, brute_force_check(d4)).is_permutation != _note(b4, brute_force_check(b4)).is_permutation:
                    bad["result3"].append((p, e, l))
                for k in range(p):
                    if k in (0, 2, 4):
                        continue
                    dk = dickson_pl2(p, e, l, k)
                    t = trinomial(FamilyParams(p, e, l, k), F)
                    n += 1
                    if _note(dk, brute_force_check(dk)).is_permutation != brute_force_check(t).is_permutation:
                        bad["result4"].append((p, e, l, k))
    return n, bad


@functools.cache
def criterion5():
    rng = random.Random(SEED)
    hermite_bad, zieve_bad = [], []
    n_hermite = n_zieve = 0

    F5 = build_field(5)
    polys = [Poly(F5, (a, b, c, d)) for a in range(5) for b in range(5) for c in range(5) for d in range(5)]
    for F in (build_field(3, 2), build_field(5, 2)):
        polys += [Poly(F, tuple(rng.randrange(F.q) for _ in range(F.q))) for _ in range(500)]
    for f in polys:
        h = _note(f, hermite_check(f))
        b = _note(f, brute_force_check(f))
        n_hermite += 1
        if h.is_permutation != b.is_permutation:
            hermite_bad.append(f)

    for p, e in ((3, 2), (5, 2), (3, 3), (7, 2)):
        F = build_field(p, e)
        for d in [d for d in range(1, F.q) if (F.q - 1) % d == 0]:
            for r in range(1, 7):
                for _ in range(50):
                    h = Poly(F, tuple(rng.randrange(F.q) for _ in range(d + 1)))
                    mf = MultiplicativeForm(r, d, h)
                    f = mf.expand()
                    z = _note(f, zieve_check(mf), mf)
                    b = _note(f, brute_force_check(f))
                    n_zieve += 1
                    if z.is_permutation != b.is_permutation:
                        zieve_bad.append((p, e, d, r, h))
    return n_hermite, hermite_bad, n_zieve, zieve_bad


def test_criterion1_thm31_grid(record_criterion):
    n, bad, elapsed = criterion1()
    ok = not bad and elapsed < 10.0
    record_criterion(1, ok, f"{n - len(bad)}/{n} cells agree, {elapsed:.2f}s (limit 10s)")
    assert n == 240
    assert not bad, bad
    assert elapsed < 10.0


def test_criterion2_thm41_grid(record_criterion):
    n, bad, elapsed = criterion2()
    ok = not bad and elapsed < 5.0
    record_criterion(2, ok, f"{n - len(bad)}/{n} cells agree, {elapsed:.2f}s (limit 5s)")
    assert n == sum(4 * e + 2 for e in range(1, 5))
    assert not bad, bad
    assert elapsed < 5.0


def test_criterion3_result1(record_criterion):
    pointwise_bad, verdict_bad = criterion3()
    ok = not pointwise_bad and not verdict_bad
    record_criterion(3, ok, f"pointwise mismatches {pointwise_bad}, verdict mismatches {verdict_bad}")
    assert not pointwise_bad
    assert not verdict_bad


def test_criterion4_results234(record_criterion):
    n, bad = criterion4()
    ok = not any(bad.values())
    record_criterion(4, ok, f"{n} result-4 cells; disagreements {sum(map(len, bad.values()))}")
    assert not any(bad.values()), bad


def test_criterion5_oracle_agreement(record_criterion):
    n_h, h_bad, n_z, z_bad = criterion5()
    ok = not h_bad and not z_bad
    record_criterion(5, ok, f"hermite {n_h - len(h_bad)}/{n_h}, multiplicative {n_z - len(z_bad)}/{n_z}")
    assert n_h == 625 + 1000
    assert not h_bad
    assert not z_bad


def test_criterion6_coefficient_identity(record_criterion):
    bad = []
    n = 0
    for k in range(13):
        for nn in range(1, 31):
            for i in range(nn // 2 + 1):
                tail = math.comb(nn - i - 1, i - 1) if i >= 1 else 0
                n += 1
                if (nn - k * i) * math.comb(nn - i, i) != (nn - i) * (math.comb(nn - i, i) - (k - 1) * tail):
                    bad.append((nn, k, i))
    record_criterion(6, not bad, f"{n - len(bad)}/{n} (n, i, k) triples")
    assert not bad


def test_criterion7_witness_validity(record_criterion):
    for fn in (criterion1, criterion2, criterion3, criterion4, criterion5):
        fn()
    bad = [(f, v) for f, v, mf in NEGATIVES if not revalidate(f, v, mf)]
    kinds = sorted({v.witness.kind for _, v, _ in NEGATIVES})
    record_criterion(7, not bad, f"{len(NEGATIVES) - len(bad)}/{len(NEGATIVES)} witnesses re-validate ({', '.join(kinds)})")
    assert NEGATIVES
    assert not bad


def test_criterion8_periodicity(record_criterion):
    bad = []
    n = 0
    for c in thm31_cells():
        shifted = FamilyParams(c.p, c.e, c.l + 2 * c.e, c.k)
        n += 1
        if brute_force_check(trinomial(c)).is_permutation != brute_force_check(trinomial(shifted)).is_permutation:
            bad.append(c.key())
    only_l0 = all(key[2] == 0 for key in bad)
    record_criterion(8, not bad, f"{n - len(bad)}/{n} cells periodic; every differing cell has l = 0: {only_l0}; "
                     f"first differing (p, e, l, k): {bad[:4]}")
    assert not bad, f"{len(bad)} cells differ between l and l + 2e: {bad}"
