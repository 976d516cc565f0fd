"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import random
import time
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import gcd

import mpmath
import pytest

from rankdual import oracle
from rankdual.cli import random_admissible
from rankdual.diagrams import WeightSystem, all_diagrams, make_diagram
from rankdual.duality import check_postconditions, normalize, replay
from rankdual.parlin import check_diagram
from rankdual.quot import (
    IntersectionInstance,
    intersection_number,
    lr_oracle,
    three_point_degree_zero,
)
from rankdual.schur import reciprocity_check
from rankdual.verlinde import (
    VerlindeInstance,
    all_variants,
    check_rank_level,
    verlinde,
    verlinde_gl,
    verlinde_twisted,
)

SEED = 20240611


@pytest.fixture
def report(capsys):
    def emit(number, ok, text, elapsed, budget=None):
        timing = f"{elapsed:.2f}s" + (f" / {budget}s" if budget else "")
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {text} ({timing})")
    return emit


@lru_cache(maxsize=None)
def rank_level_instances():
    rng = random.Random(SEED)
    pairs = [(2, 1), (1, 2), (2, 2), (2, 3), (3, 2)]
    out = []
    while len(out) < 50:
        r, l = rng.choice(pairs)
        g, n = rng.randint(0, 3), rng.randint(0, 3)
        pool = list(all_diagrams(r, l))
        ws = WeightSystem(tuple(rng.choice(pool) for _ in range(n)), r, l)
        if ws.total_size % (r * l) == 0:
            out.append(VerlindeInstance(r, l, g, ws))
    return tuple(out)


@lru_cache(maxsize=None)
def normalized_instances():
    rng = random.Random(SEED + 5)
    return tuple(normalize(random_admissible(rng, 3, 3, 2, 3, 3))[0] for _ in range(30))


def test_level_one_gl_is_one(report):
    start = time.perf_counter()
    checked = bad = 0
    for r in range(1, 7):
        pool = [make_diagram([1] * k, r, 1) for k in range(r + 1)]
        for n in range(5):
            for ds in combinations_with_replacement(pool, n):
                ws = WeightSystem(ds, r, 1)
                if ws.total_size % r:
                    continue
                for g in range(4):
                    checked += 1
                    bad += verlinde_gl(VerlindeInstance(r, 1, g, ws)) != 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 10
    report(1, ok, f"level-1 GL number equals 1 on {checked} systems, {bad} failures", elapsed, 10)
    assert ok


def test_reciprocity_exhaustive(report):
    start = time.perf_counter()
    checked = bad = 0
    for N in range(2, 8):
        for r in range(1, N):
            for lam in all_diagrams(r, N - r):
                for S in combinations(range(N), r):
                    checked += 1
                    bad += not reciprocity_check(lam, S).ok
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 60
    report(2, ok, f"Schur reciprocity on {checked} (lambda, S) pairs, N <= 7, {bad} failures", elapsed, 60)
    assert ok


def test_rank_level_equalities(report):
    start = time.perf_counter()
    reports = [check_rank_level(inst) for inst in rank_level_instances()]
    bad = sum(not (rep.untwisted_ok and rep.twisted_ok) for rep in reports)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and len(reports) == 50 and elapsed < 300
    report(3, ok, f"rank-level SL/GL and twisted/twisted on {len(reports)} systems, {bad} failures", elapsed, 300)
    assert ok


def test_cross_relations(report):
    start = time.perf_counter()
    bad = 0
    for inst in rank_level_instances():
        for side in (inst, inst.transposed()):
            v = all_variants(side)
            r, l, g = side.r, side.l, side.g
            bad += v["gl"] * r**g != v["sl"] * l**g
            bad += v["twisted"] * r**g != v["sl"] * (r + l) ** g
    elapsed = time.perf_counter() - start
    ok = bad == 0
    report(4, ok, f"GL/SL and twisted/SL relations on both sides of 50 systems, {bad} failures", elapsed)
    assert ok


def test_vi_equals_twisted(report):
    start = time.perf_counter()
    bad = 0
    rows = normalized_instances()
    for out in rows:
        vi = intersection_number(IntersectionInstance(out.r, out.l, out.g, out.d, out.weights.conjugate()))
        tw = verlinde_twisted(VerlindeInstance(out.l, out.r, out.g, out.weights.transpose()))
        bad += vi != tw
    elapsed = time.perf_counter() - start
    ok = bad == 0 and len(rows) == 30 and elapsed < 300
    report(5, ok, f"Vafa-Intriligator equals l-side twisted number on {len(rows)} normalized instances, {bad} failures", elapsed, 300)
    assert ok


def test_normalization_postconditions(report):
    start = time.perf_counter()
    rng = random.Random(SEED + 6)
    bad = 0
    for _ in range(200):
        inst = random_admissible(rng, 4, 4, 3, 5, 4)
        out, plan = normalize(inst)
        again = normalize(inst)
        bad += not (check_postconditions(out).ok and replay(inst, plan) == out
                    and replay(inst, plan) == replay(inst, plan) and again == (out, plan))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 30
    report(6, ok, f"normalization postconditions and plan replay on 200 instances, {bad} failures", elapsed, 30)
    assert ok


def test_parabolic_linear_algebra(report):
    start = time.perf_counter()
    bad = checked = 0
    for r in range(1, 4):
        for l in range(1, 4):
            for lam in all_diagrams(r, l):
                checked += 1
                bad += not check_diagram(lam).ok
    rng = random.Random(SEED + 7)
    for seed in range(100):
        r, l = rng.randint(1, 5), rng.randint(1, 5)
        lam = rng.choice(list(all_diagrams(r, l)))
        checked += 1
        bad += not check_diagram(lam, seed=seed).ok
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 120
    report(7, ok, f"tensor/hom/annihilator/tangent/string dimensions on {checked} cases, {bad} failures", elapsed, 120)
    assert ok


def test_genus_zero_lr(report):
    start = time.perf_counter()
    bad = checked = 0
    for N in range(2, 7):
        for r in range(1, N):
            l = N - r
            pool = list(all_diagrams(r, l))
            for a in pool:
                for b in pool:
                    for c in pool:
                        if a.size + b.size + c.size == r * l:
                            checked += 1
                            bad += three_point_degree_zero(a, b, c) != lr_oracle(a, b, c)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 120
    report(8, ok, f"genus-0 three-point numbers equal LR coefficients on {checked} triples, {bad} failures", elapsed, 120)
    assert ok


def test_integrality_and_galois(report):
    start = time.perf_counter()
    bad = 0
    for inst in rank_level_instances()[:10]:
        N = inst.N
        for variant in ("sl", "gl", "twisted"):
            ref = verlinde(inst, variant)
            bad += not (isinstance(ref, int) and ref >= 0)
            bad += any(verlinde(inst, variant, a) != ref for a in range(2, N) if gcd(a, N) == 1)
    for out in normalized_instances()[:10]:
        base = IntersectionInstance(out.r, out.l, out.g, out.d, out.weights.conjugate())
        ref = intersection_number(base)
        N = out.r + out.l
        bad += ref < 0
        bad += any(intersection_number(base, a) != ref for a in range(2, N) if gcd(a, N) == 1)
    elapsed = time.perf_counter() - start
    ok = bad == 0
    report(9, ok, f"integrality and primitive-root independence on 20 instances, {bad} failures", elapsed)
    assert ok


def test_anchor_values(report):
    start = time.perf_counter()
    inst = VerlindeInstance(2, 1, 2)
    values = all_variants(inst)
    ws = WeightSystem((), 2, 1)
    close = all(
        abs(oracle.verlinde_numeric(2, 1, 2, ws, v) - values[v]) < mpmath.mpf(10) ** -40
        for v in values
    )
    ok = values == {"sl": 4, "gl": 1, "twisted": 9} and close
    elapsed = time.perf_counter() - start
    report(10, ok, f"anchor (r,l,g,n)=(2,1,2,0): sl={values['sl']} gl={values['gl']} twisted={values['twisted']}", elapsed)
    assert ok
