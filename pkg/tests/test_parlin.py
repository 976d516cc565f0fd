import random

import pytest

from rankdual._linalg import Subspace, rank, rref
from rankdual.diagrams import all_diagrams, conjugate, empty, full, make_diagram, transpose
from rankdual.parlin import (
    ParlinError,
    annihilator_check,
    check_diagram,
    dual_space,
    parabolic_hom,
    random_space,
    schubert_tangent_dim,
    standard_full_flag,
    standard_space,
    string_filtration,
    tensor_subspace,
)


def test_subspace_basics():
    U = Subspace.span([[1, 1, 0], [2, 2, 0]], 3)
    assert U.dim == 1
    assert U.annihilator().dim == 2
    assert U.annihilator().annihilator() == U
    V = Subspace.coordinate([0, 2], 3)
    assert U.intersect(V).dim == 0
    assert (U + V).dim == 3
    assert rank([[1, 2], [2, 4]], 2) == 1
    assert rref([[0, 2], [1, 1]], 2) == ((1, 0), (0, 1))


def test_standard_space_dims():
    E = standard_space(2, make_diagram([2, 1], 2, 3))
    assert [s.dim for s in E.filtration] == [2, 1, 0]
    assert all(s.dim == 0 for s in standard_space(3, empty(3, 2)).filtration)
    assert all(s.dim == 3 for s in standard_space(3, full(3, 2)).filtration)


def test_random_space_reproducible():
    lam = make_diagram([3, 1], 3, 4)
    assert random_space(3, lam, 7) == random_space(3, lam, 7)
    assert random_space(3, lam, 7) != random_space(3, lam, 8)
    assert [s.dim for s in random_space(3, lam, 7).filtration] == list(transpose(lam).parts)


@pytest.mark.parametrize("seed", range(10))
def test_dual_involution(seed):
    rng = random.Random(seed)
    r, l = rng.randint(1, 4), rng.randint(1, 4)
    lam = rng.choice(list(all_diagrams(r, l)))
    E = random_space(r, lam, seed)
    D = dual_space(E)
    assert D.type == conjugate(lam)
    assert dual_space(D) == E


def test_tensor_subspace_examples():
    lam = make_diagram([2, 1], 2, 3)
    G = tensor_subspace(standard_space(2, lam), standard_space(3, transpose(lam)))
    assert G.dim == 3
    e = empty(2, 2)
    assert tensor_subspace(standard_space(2, e), standard_space(2, transpose(e))).dim == 0
    f = full(2, 2)
    assert tensor_subspace(standard_space(2, f), standard_space(2, transpose(f))).dim == 4
    with pytest.raises(ParlinError):
        tensor_subspace(standard_space(2, lam), standard_space(3, empty(3, 2)))


def test_parabolic_hom_examples():
    for parts, r, l, expected in (([], 2, 3, 6), ([2, 2], 2, 2, 0), ([2, 1], 2, 2, 1)):
        lam = make_diagram(parts, r, l)
        F = standard_space(l, conjugate(transpose(lam)))
        assert parabolic_hom(standard_space(r, lam), F).dim == expected


@pytest.mark.parametrize("r", range(1, 4))
@pytest.mark.parametrize("l", range(1, 4))
def test_all_identities_standard(r, l):
    for lam in all_diagrams(r, l):
        assert check_diagram(lam).ok


@pytest.mark.parametrize("seed", range(25))
def test_all_identities_random(seed):
    rng = random.Random(1000 + seed)
    r, l = rng.randint(1, 5), rng.randint(1, 5)
    lam = rng.choice(list(all_diagrams(r, l)))
    rep = check_diagram(lam, seed=seed)
    assert rep.ok, rep


def test_annihilator_empty():
    lam = empty(2, 2)
    E = standard_space(2, lam)
    F = standard_space(2, conjugate(transpose(lam)))
    assert annihilator_check(E, F)
    assert parabolic_hom(E, F).dim == 4


@pytest.mark.parametrize("N", range(2, 8))
def test_schubert_tangent(N):
    for r in range(1, N):
        for lam in all_diagrams(r, N - r):
            assert schubert_tangent_dim(lam) == r * (N - r) - lam.size


def test_string_filtration_example():
    lam = make_diagram([1, 0], 2, 1)
    G = string_filtration(standard_full_flag(2), standard_full_flag(1), lam)
    assert [x.dim for x in G] == [2, 1, 0, 0]
    assert G[0].dim == 2 * 1 and G[-1].dim == 0
