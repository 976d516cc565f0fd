import random
from math import comb, gcd

import mpmath
import pytest

from rankdual.diagrams import WeightSystem, all_diagrams, conjugate, empty, make_diagram
from rankdual.duality import normalize
from rankdual.oracle import intersection_numeric
from rankdual.quot import (
    IntersectionInstance,
    QuotError,
    intersection_number,
    lr_oracle,
    lr_product,
    quot_dimension,
    three_point_degree_zero,
    vi_equals_verlinde,
)
from rankdual.cli import random_admissible


def test_quot_dimension():
    assert quot_dimension(1, 1, 0, 3, 1) == 5
    assert quot_dimension(3, 2, 1, 0, 0) == 0
    assert quot_dimension(2, 1, 2, 0, 4) == 2


def test_dimension_gate():
    with pytest.raises(QuotError):
        IntersectionInstance(1, 1, 0, 1, WeightSystem.of([[1], [1], [1]], 1, 1))


@pytest.mark.parametrize("e", range(1, 5))
def test_projective_line_points(e):
    # through 2e + 1 general points passes exactly one rational map of degree e
    n = 2 * e + 1
    inst = IntersectionInstance(1, 1, 0, -1, WeightSystem.of([[1]] * n, 1, 1))
    assert intersection_number(inst) == 1


@pytest.mark.parametrize("r,l", [(1, 1), (2, 1), (1, 2), (2, 2), (2, 3), (3, 2), (1, 4)])
def test_genus_one_empty_matches_twisted(r, l):
    inst = IntersectionInstance(r, l, 1, 0, WeightSystem((), r, l))
    assert intersection_number(inst) == comb(r + l, l)
    assert vi_equals_verlinde(r, l, 1, 0, 0, WeightSystem((), r, l)).ok


def test_lr_oracle_basics():
    r, l = 3, 3
    for mu in all_diagrams(r, l):
        for nu in all_diagrams(r, l):
            assert lr_oracle(empty(r, l), mu, nu) == (1 if conjugate(nu) == mu else 0)
    row = make_diagram([2], r, l)
    for lam in all_diagrams(r, l):
        for nu in all_diagrams(r, l):
            assert lr_oracle(lam, row, nu) <= 1


def test_lr_product_known():
    # s_21 * s_21 in unbounded rows/cols
    prod = lr_product((2, 1), (2, 1), 6, 6)
    assert prod[(3, 2, 1)] == 2
    assert prod[(4, 2)] == 1 and prod[(2, 2, 1, 1)] == 1
    assert sum(prod.values()) == 8


@pytest.mark.parametrize("N", range(2, 6))
def test_genus_zero_matches_lr(N):
    for r in range(1, N):
        l = N - r
        pool = list(all_diagrams(r, l))
        for a in pool:
            for b in pool:
                for c in pool:
                    if a.size + b.size + c.size == r * l:
                        assert three_point_degree_zero(a, b, c) == lr_oracle(a, b, c)


def test_oracle_route_agrees():
    rng = random.Random(5)
    for _ in range(8):
        inst = random_admissible(rng, 3, 3, 2, 3, 3)
        out, _ = normalize(inst)
        mu = out.weights.conjugate()
        exact = intersection_number(IntersectionInstance(out.r, out.l, out.g, out.d, mu))
        approx = intersection_numeric(out.r, out.l, out.g, mu)
        assert abs(approx - exact) < mpmath.mpf(10) ** -20


def test_permutation_and_galois_invariance():
    rng = random.Random(9)
    for _ in range(6):
        inst = random_admissible(rng, 3, 3, 2, 3, 3)
        out, _ = normalize(inst)
        mu = out.weights.conjugate()
        base = IntersectionInstance(out.r, out.l, out.g, out.d, mu)
        ref = intersection_number(base)
        shuffled = list(mu.diagrams)
        rng.shuffle(shuffled)
        perm = IntersectionInstance(out.r, out.l, out.g, out.d, WeightSystem(tuple(shuffled), out.r, out.l))
        assert intersection_number(perm) == ref
        N = out.r + out.l
        for a in range(1, N):
            if gcd(a, N) == 1:
                assert intersection_number(base, root=a) == ref


def test_vi_equals_verlinde_on_normalized():
    rng = random.Random(21)
    for _ in range(10):
        inst = random_admissible(rng, 3, 3, 2, 3, 3)
        out, _ = normalize(inst)
        assert vi_equals_verlinde(out.r, out.l, out.g, out.n, out.d, out.weights).ok
