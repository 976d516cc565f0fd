"""Determinants, Vandermonde and Schur values at tuples of N-th roots of unity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cyclo import CycloNum, zeta_pow
from .diagrams import YoungDiagram, make_diagram, transpose


class SchurError(ValueError):
    pass


@dataclass(frozen=True)
class EvalPoint:
    """The tuple (zeta_N^s for s in exponents), kept in the given order."""

    order: int
    exponents: tuple[int, ...]

    @classmethod
    def of(cls, N: int, exponents: Iterable[int]) -> "EvalPoint":
        return cls(N, tuple(int(e) % N for e in exponents))

    def __len__(self):
        return len(self.exponents)

    def is_distinct(self) -> bool:
        return len(set(self.exponents)) == len(self.exponents)

    def complement(self) -> "EvalPoint":
        taken = set(self.exponents)
        return EvalPoint(self.order, tuple(e for e in range(self.order) if e not in taken))

    def values(self) -> list[CycloNum]:
        return [zeta_pow(self.order, e) for e in self.exponents]

    def galois(self, a: int) -> "EvalPoint":
        """Same subset read with the primitive root zeta^a."""
        return EvalPoint(self.order, tuple((a * e) % self.order for e in self.exponents))


def bareiss_det(matrix: Sequence[Sequence[CycloNum]]) -> CycloNum:
    """Fraction-free elimination; each exact division uses the field inverse."""
    n = len(matrix)
    if n == 0:
        raise SchurError("determinant of an empty matrix needs an order; use det_or_one")
    m = [list(row) for row in matrix]
    N = m[0][0].order
    sign = 1
    prev = CycloNum.one(N)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return CycloNum.zero(N)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        inv_prev = prev.inverse() if prev != 1 else None
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                val = pivot * m[i][j] - mik * m[k][j]
                m[i][j] = val * inv_prev if inv_prev is not None else val
            m[i][k] = CycloNum.zero(N)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _det(N: int, matrix: list[list[CycloNum]]) -> CycloNum:
    if not matrix:
        return CycloNum.one(N)
    if len(matrix) == 1:
        return matrix[0][0]
    if len(matrix) == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    return bareiss_det(matrix)


def q_eval(lam: YoungDiagram, pts: EvalPoint) -> CycloNum:
    """det(zeta^{s_i (a_j + r - j)})."""
    r = lam.rows
    if len(pts) != r:
        raise SchurError(f"need {r} points for {lam}, got {len(pts)}")
    return _q_cached(lam.parts, pts.order, pts.exponents)


@lru_cache(maxsize=1 << 16)
def _q_cached(parts: tuple[int, ...], N: int, exps: tuple[int, ...]) -> CycloNum:
    r = len(parts)
    shifted = [a + r - j for j, a in enumerate(parts, start=1)]
    mat = [[zeta_pow(N, s * c) for c in shifted] for s in exps]
    return _det(N, mat)


def vandermonde(pts: EvalPoint) -> CycloNum:
    """Q_0 at the points: det(zeta^{s_i (r - j)})."""
    r = len(pts)
    return _q_cached((0,) * r, pts.order, pts.exponents)


@lru_cache(maxsize=1 << 14)
def _vandermonde_inverse(N: int, exps: tuple[int, ...]) -> CycloNum:
    v = _q_cached((0,) * len(exps), N, exps)
    if v.is_zero():
        raise SchurError(f"repeated evaluation points {exps} mod {N}")
    return v.inverse()


def schur_eval(lam: YoungDiagram, pts: EvalPoint) -> CycloNum:
    """Bialternant Q_lam / Vdm at distinct roots of unity."""
    if len(pts) != lam.rows:
        raise SchurError(f"need {lam.rows} points for {lam}, got {len(pts)}")
    if not pts.is_distinct():
        raise SchurError(f"repeated evaluation points {pts.exponents} mod {pts.order}")
    return _schur_cached(lam.parts, pts.order, pts.exponents)


@lru_cache(maxsize=1 << 16)
def _schur_cached(parts: tuple[int, ...], N: int, exps: tuple[int, ...]) -> CycloNum:
    if not any(parts):
        return CycloNum.one(N)
    return _q_cached(parts, N, exps) * _vandermonde_inverse(N, exps)


def elementary_symmetric(values: Sequence[CycloNum], N: int) -> list[CycloNum]:
    """[e_0, e_1, ..., e_k] of the given field elements."""
    e = [CycloNum.one(N)] + [CycloNum.zero(N)] * len(values)
    for v in values:
        for k in range(len(e) - 1, 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return e


def jacobi_trudi_eval(lam: YoungDiagram, e_values: Sequence[CycloNum]) -> CycloNum:
    """det(e_{lam^T_i - i + j}); e_k outside 0..len(e_values)-1 is zero.

    With ``e_values`` the elementary symmetric values of an alphabet this is
    the Schur value of ``lam`` at that alphabet.
    """
    N = e_values[0].order
    cols = [b for b in transpose(lam).parts if b]
    k = len(cols)
    top = len(e_values) - 1

    def e(i: int) -> CycloNum:
        return e_values[i] if 0 <= i <= top else CycloNum.zero(N)

    mat = [[e(cols[i] - i + j) for j in range(k)] for i in range(k)]
    return _det(N, mat)


@dataclass(frozen=True)
class ReciprocityReport:
    diagram: YoungDiagram
    subset: tuple[int, ...]
    left: CycloNum
    right: CycloNum

    @property
    def ok(self) -> bool:
        return self.left == self.right


def reciprocity_check(lam: YoungDiagram, S: Iterable[int]) -> ReciprocityReport:
    """Compare S_lam(zeta^S) with (-1)^|lam| S_{lam^T}(zeta^T), T the complement of S."""
    N = lam.rows + lam.level
    pts = EvalPoint.of(N, sorted(set(int(s) % N for s in S)))
    if len(pts) != lam.rows:
        raise SchurError(f"subset must have {lam.rows} distinct residues mod {N}")
    left = schur_eval(lam, pts)
    right = schur_eval(transpose(lam), pts.complement())
    if lam.size % 2:
        right = -right
    return ReciprocityReport(lam, pts.exponents, left, right)


def schur_from_parts(parts: Sequence[int], r: int, l: int, N: int, S: Sequence[int]) -> CycloNum:
    """Convenience wrapper used by the CLI."""
    return schur_eval(make_diagram(parts, r, l), EvalPoint.of(N, S))
