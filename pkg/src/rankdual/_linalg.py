"""Exact subspaces of Q^n kept as reduced row-echelon bases (so equality is tuple equality)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[Vector, ...]:
    """Nonzero rows of the reduced row-echelon form."""
    m = [[Fraction(x) for x in row] for row in rows]
    for row in m:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)} in a {ncols}-column matrix")
    pivot_row = 0
    for col in range(ncols):
        pr = next((i for i in range(pivot_row, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        p = m[pivot_row][col]
        if p != 1:
            m[pivot_row] = [x / p for x in m[pivot_row]]
        prow = m[pivot_row]
        for i in range(len(m)):
            if i != pivot_row and m[i][col] != 0:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], prow)]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(row) for row in m[:pivot_row])


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols))


@dataclass(frozen=True)
class Subspace:
    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        return cls(ambient, rref(vectors, ambient))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def whole(cls, ambient: int) -> "Subspace":
        return cls.coordinate(range(ambient), ambient)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient: int) -> "Subspace":
        """Span of the standard basis vectors at the given 0-based indices."""
        vecs = []
        for i in sorted(set(indices)):
            v = [0] * ambient
            v[i] = 1
            vecs.append(v)
        return cls.span(vecs, ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same(other)
        return Subspace.span(self.basis + other.basis, self.ambient)

    def _same(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch {self.ambient} vs {other.ambient}")

    def annihilator(self) -> "Subspace":
        """Vectors w with w . v = 0 for every v here (standard pairing)."""
        n = self.ambient
        pivots = [next(j for j, x in enumerate(row) if x != 0) for row in self.basis]
        free = [j for j in range(n) if j not in pivots]
        out = []
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for row, p in zip(self.basis, pivots):
                v[p] = -row[f]
            out.append(v)
        return Subspace.span(out, n)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def contains(self, other: "Subspace") -> bool:
        self._same(other)
        return (self + other).dim == self.dim

    def project(self, coords: Sequence[int]) -> "Subspace":
        """Image under the coordinate projection onto ``coords`` (0-based, in order)."""
        return Subspace.span(([v[c] for c in coords] for v in self.basis), len(coords))


def tensor_vector(v: Sequence, w: Sequence) -> list:
    """Flat coordinates of v (x) w, index i * len(w) + j."""
    return [a * b for a in v for b in w]


def tensor(U: Subspace, V: Subspace) -> Subspace:
    return Subspace.span(
        (tensor_vector(u, v) for u in U.basis for v in V.basis), U.ambient * V.ambient
    )


def solve_conditions(conditions: Iterable[Sequence], ambient: int) -> Subspace:
    """Common kernel of the given linear forms."""
    return Subspace.span(conditions, ambient).annihilator()
