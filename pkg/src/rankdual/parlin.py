"""Parabolic structures on finite-dimensional rational vector spaces, checked by exact linear algebra.

A ParabolicSpace of type lam (r rows, level l) lives in Q^r and carries the
decreasing filtration E_1 >= ... >= E_l with dim E_j = lam^T_j.  E_0 is the
whole space.  Hom(E, F) is identified with E^dual (x) F, flat index a*dim F + b.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ._linalg import Subspace, rank, solve_conditions, tensor, tensor_vector
from .diagrams import (
    YoungDiagram,
    conjugate,
    index_sets,
    string_of,
    transpose,
)


class ParlinError(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicSpace:
    dim: int
    filtration: tuple[Subspace, ...]
    type: YoungDiagram

    def __post_init__(self):
        if self.type.rows != self.dim:
            raise ParlinError(f"type {self.type} needs ambient dimension {self.type.rows}")
        if len(self.filtration) != self.type.level:
            raise ParlinError(f"type {self.type} needs {self.type.level} filtration steps")
        dims = transpose(self.type).parts
        prev = Subspace.whole(self.dim)
        for j, (sub, b) in enumerate(zip(self.filtration, dims), start=1):
            if sub.ambient != self.dim or sub.dim != b:
                raise ParlinError(f"step {j} has dimension {sub.dim}, expected {b}")
            if not prev.contains(sub):
                raise ParlinError(f"filtration is not decreasing at step {j}")
            prev = sub

    def step(self, j: int) -> Subspace:
        """E_j for 0 <= j <= level (E_0 is the whole space)."""
        if j == 0:
            return Subspace.whole(self.dim)
        return self.filtration[j - 1]

    def reduced(self) -> tuple[Subspace, ...]:
        """The distinct proper nonzero steps, largest first."""
        out: list[Subspace] = []
        for sub in self.filtration:
            if 0 < sub.dim < self.dim and (not out or out[-1] != sub):
                out.append(sub)
        return tuple(out)


def _check_rows(r: int, lam: YoungDiagram) -> None:
    if lam.rows != r:
        raise ParlinError(f"diagram {lam} has {lam.rows} rows, expected {r}")


def space_from_basis(columns: Sequence[Sequence], lam: YoungDiagram) -> ParabolicSpace:
    """Filtration by the spans of the first b_j of the given basis vectors."""
    r = lam.rows
    steps = tuple(Subspace.span(columns[:b], r) for b in transpose(lam).parts)
    return ParabolicSpace(r, steps, lam)


def standard_space(r: int, lam: YoungDiagram) -> ParabolicSpace:
    _check_rows(r, lam)
    basis = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    return space_from_basis(basis, lam)


def random_basis(n: int, seed: int, bound: int = 3) -> list[list[int]]:
    """An invertible n x n integer matrix with entries in [-bound, bound], as columns."""
    rng = random.Random(seed)
    while True:
        cols = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if rank(cols, n) == n:
            return cols


def random_space(r: int, lam: YoungDiagram, seed: int) -> ParabolicSpace:
    _check_rows(r, lam)
    return space_from_basis(random_basis(r, seed), lam)


def dual_space(E: ParabolicSpace) -> ParabolicSpace:
    """Filtration of E^dual by the annihilators E_{l+1-i}^perp; its type is lam*."""
    l = E.type.level
    steps = tuple(E.step(l + 1 - i).annihilator() for i in range(1, l + 1))
    return ParabolicSpace(E.dim, steps, conjugate(E.type))


def tensor_subspace(E: ParabolicSpace, F: ParabolicSpace) -> Subspace:
    """Sum over rows i of E_{a_i} (x) F_i, where F has type lam^T and dim F_i = a_i."""
    lam = E.type
    if F.type != transpose(lam):
        raise ParlinError(f"second factor must have type {transpose(lam)}, got {F.type}")
    total = Subspace.zero(E.dim * F.dim)
    for i, a in enumerate(lam.parts, start=1):
        if a == 0:
            break
        total = total + tensor(E.step(a), F.step(i))
    return total


def corners(lam: YoungDiagram) -> list[int]:
    """1-based rows alpha with a_alpha > a_{alpha+1} (a_{r+1} = 0)."""
    parts = lam.parts + (0,)
    return [k + 1 for k in range(lam.rows) if parts[k] > parts[k + 1]]


def hom_conditions(pairs: Sequence[tuple[Subspace, Subspace]], dim_e: int, dim_f: int) -> Subspace:
    """Maps phi: Q^dim_e -> Q^dim_f with phi(A) inside B for every (A, B)."""
    conds = []
    for A, B in pairs:
        for v in A.basis:
            for w in B.annihilator().basis:
                conds.append(tensor_vector(v, w))
    return solve_conditions(conds, dim_e * dim_f)


def parabolic_hom(E: ParabolicSpace, F: ParabolicSpace) -> Subspace:
    """Parabolic maps from E (type lam) to F (type lam^T*), imposed at the corners of lam."""
    lam = E.type
    expected = conjugate(transpose(lam))
    if F.type != expected:
        raise ParlinError(f"target must have type {expected}, got {F.type}")
    r = lam.rows
    pairs = [(E.step(lam.parts[alpha - 1]), F.step(r + 1 - alpha)) for alpha in corners(lam)]
    return hom_conditions(pairs, E.dim, F.dim)


def annihilator_check(E: ParabolicSpace, F: ParabolicSpace) -> bool:
    """Parabolic homs E -> F are exactly the annihilator of the tensor subspace of (E, F^dual)."""
    G = tensor_subspace(E, dual_space(F))
    return G.annihilator() == parabolic_hom(E, F)


def schubert_tangent_dim(lam: YoungDiagram) -> int:
    """dim of parabolic homs at the coordinate point e_I of Gr(r, r+l) for the standard flag."""
    r, l = lam.rows, lam.level
    N = r + l
    I, J = index_sets(lam)
    ambient_E = Subspace.coordinate([i - 1 for i in I], N)
    j_coords = [j - 1 for j in J]
    i_coords = [i - 1 for i in I]
    pairs = []
    for alpha in corners(lam):
        i_alpha = I[alpha - 1]
        flag = Subspace.coordinate(range(i_alpha), N)
        e_piece = ambient_E.intersect(flag).project(i_coords)
        f_piece = Subspace.coordinate(range(i_alpha - 1), N).project(j_coords)
        pairs.append((e_piece, f_piece))
    return hom_conditions(pairs, r, l).dim


def full_flag(columns: Sequence[Sequence]) -> tuple[Subspace, ...]:
    """Increasing flag V_0 < V_1 < ... < V_n spanned by initial segments of the columns."""
    n = len(columns)
    return tuple(Subspace.span(columns[:k], n) for k in range(n + 1))


def standard_full_flag(n: int) -> tuple[Subspace, ...]:
    return full_flag([[1 if i == j else 0 for i in range(n)] for j in range(n)])


def random_full_flag(n: int, seed: int) -> tuple[Subspace, ...]:
    return full_flag(random_basis(n, seed))


def string_counts(lam: YoungDiagram, k: int) -> tuple[int, int]:
    """(k_L, k_R): L's among positions 1..k and R's among positions k+1..r+l."""
    symbols = string_of(lam).symbols
    return symbols[:k].count("L"), symbols[k:].count("R")


def string_filtration(
    E: Sequence[Subspace], F: Sequence[Subspace], lam: YoungDiagram
) -> list[Subspace]:
    """G_k = Hom(F/F_{k_L}, E_{k_R}) inside Hom(F, E), for k = 0..r+l.

    ``E`` and ``F`` are increasing full flags (index = dimension).  Hom(F, E) is
    F^dual (x) E with flat index b * r + a.
    """
    r, l = lam.rows, lam.level
    if len(E) != r + 1 or len(F) != l + 1:
        raise ParlinError(f"need full flags of lengths {r + 1} and {l + 1}")
    out = []
    for k in range(r + l + 1):
        k_l, k_r = string_counts(lam, k)
        out.append(tensor(F[k_l].annihilator(), E[k_r]))
    return out


@dataclass(frozen=True)
class ParlinReport:
    diagram: YoungDiagram
    seed: int | None
    tensor_dim: int
    hom_dim: int
    annihilator: bool
    tangent_dim: int
    string_dims: tuple[int, ...]
    string_expected: tuple[int, ...]
    string_decreasing: bool

    @property
    def ok(self) -> bool:
        lam = self.diagram
        rl = lam.rows * lam.level
        return (
            self.tensor_dim == lam.size
            and self.hom_dim == rl - lam.size
            and self.annihilator
            and self.tangent_dim == rl - lam.size
            and self.string_dims == self.string_expected
            and self.string_decreasing
        )


def check_diagram(lam: YoungDiagram, seed: int | None = None) -> ParlinReport:
    """Run every parabolic identity for ``lam``; standard flags when seed is None."""
    r, l = lam.rows, lam.level
    lam_t = transpose(lam)
    target_type = conjugate(lam_t)
    if seed is None:
        E = standard_space(r, lam)
        Ft = standard_space(l, lam_t)
        F = standard_space(l, target_type)
        fe, ff = standard_full_flag(r), standard_full_flag(l)
    else:
        E = random_space(r, lam, seed)
        Ft = random_space(l, lam_t, seed + 1)
        F = random_space(l, target_type, seed + 2)
        fe, ff = random_full_flag(r, seed + 3), random_full_flag(l, seed + 4)
    G = tensor_subspace(E, Ft)
    H = parabolic_hom(E, F)
    ann = tensor_subspace(E, dual_space(F)).annihilator() == H
    strings = string_filtration(fe, ff, lam)
    dims = tuple(s.dim for s in strings)
    expected = []
    for k in range(r + l + 1):
        k_l, k_r = string_counts(lam, k)
        expected.append((l - k_l) * k_r)
    decreasing = all(a.contains(b) for a, b in zip(strings, strings[1:]))
    return ParlinReport(
        diagram=lam,
        seed=seed,
        tensor_dim=G.dim,
        hom_dim=H.dim,
        annihilator=ann,
        tangent_dim=schubert_tangent_dim(lam),
        string_dims=dims,
        string_expected=tuple(expected),
        string_decreasing=decreasing,
    )
