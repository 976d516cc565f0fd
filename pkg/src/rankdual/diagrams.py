"""Young diagrams in an l x r rectangle and weight systems on marked points.

A diagram carries its rectangle: ``rows`` (r) and ``level`` (l).  Its parts
``a_1 >= ... >= a_r`` are always padded to length r.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Raised for invalid diagrams or mismatched rectangles."""


@dataclass(frozen=True, order=True)
class YoungDiagram:
    parts: tuple[int, ...]
    rows: int
    level: int

    def __post_init__(self):
        if self.rows < 1 or self.level < 1:
            raise DiagramError(f"rectangle must be positive, got r={self.rows}, l={self.level}")
        if len(self.parts) != self.rows:
            raise DiagramError(f"expected {self.rows} parts, got {len(self.parts)}")
        prev = self.level
        for a in self.parts:
            if a < 0:
                raise DiagramError(f"negative part in {self.parts}")
            if a > prev:
                if prev == self.level:
                    raise DiagramError(f"part {a} exceeds level {self.level}")
                raise DiagramError(f"parts must be nonincreasing: {self.parts}")
            prev = a

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return self.rows

    def __getitem__(self, i):
        return self.parts[i]

    def is_empty(self) -> bool:
        return self.size == 0

    def is_full(self) -> bool:
        return all(a == self.level for a in self.parts)

    def to_text(self) -> str:
        return ",".join(str(a) for a in self.parts)

    def __str__(self):
        return f"({self.to_text()})[{self.level}x{self.rows}]"


def make_diagram(parts: Sequence[int], r: int, l: int) -> YoungDiagram:
    """Validate ``parts`` and pad with zeros to ``r`` rows."""
    parts = [int(a) for a in parts]
    if len(parts) > r:
        raise DiagramError(f"{len(parts)} parts do not fit in {r} rows")
    return YoungDiagram(tuple(parts) + (0,) * (r - len(parts)), r, l)


def empty(r: int, l: int) -> YoungDiagram:
    return YoungDiagram((0,) * r, r, l)


def full(r: int, l: int) -> YoungDiagram:
    return YoungDiagram((l,) * r, r, l)


def parse_diagram(text: str, r: int, l: int) -> YoungDiagram:
    """Parse the comma-separated text form, e.g. ``"2,1,0"``."""
    text = text.strip()
    if not text:
        return empty(r, l)
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise DiagramError(f"cannot parse diagram {text!r}") from exc
    return make_diagram(parts, r, l)


def transpose(lam: YoungDiagram) -> YoungDiagram:
    """Swap rows and columns; the result lives in the r x l rectangle."""
    parts = tuple(sum(1 for a in lam.parts if a >= j) for j in range(1, lam.level + 1))
    return YoungDiagram(parts, lam.level, lam.rows)


def conjugate(lam: YoungDiagram) -> YoungDiagram:
    """Complement of the diagram in its rectangle, rows reversed."""
    l = lam.level
    return YoungDiagram(tuple(l - a for a in reversed(lam.parts)), lam.rows, l)


def index_sets(lam: YoungDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(I, J)``: the r-subset for the diagram and the l-subset for its transpose.

    ``I = {l + k - a_k}`` and ``J = {l + 1 - j + b_j}`` with ``b = lam^T``; both
    are returned sorted.  They partition ``{1, ..., r + l}``.
    """
    r, l = lam.rows, lam.level
    I = tuple(sorted(l + k - a for k, a in enumerate(lam.parts, start=1)))
    mu = transpose(lam)
    J = tuple(sorted(l + 1 - j + b for j, b in enumerate(mu.parts, start=1)))
    return I, J


def diagram_from_index_set(I: Iterable[int], r: int, l: int) -> YoungDiagram:
    """Inverse of the ``I`` half of :func:`index_sets`."""
    I = sorted(I)
    if len(I) != r or len(set(I)) != r or I[0] < 1 or I[-1] > r + l:
        raise DiagramError(f"{I} is not an {r}-subset of 1..{r + l}")
    return YoungDiagram(tuple(l + k - i for k, i in enumerate(I, start=1)), r, l)


@dataclass(frozen=True)
class DiagramString:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if any(s not in ("R", "L") for s in self.symbols):
            raise DiagramError(f"bad string symbols {self.symbols}")

    @property
    def r(self) -> int:
        return self.symbols.count("R")

    @property
    def l(self) -> int:
        return self.symbols.count("L")

    def positions(self, symbol: str) -> tuple[int, ...]:
        """1-based positions carrying ``symbol``."""
        return tuple(i for i, s in enumerate(self.symbols, start=1) if s == symbol)

    def __str__(self):
        return "".join(self.symbols)


def string_of(lam: YoungDiagram) -> DiagramString:
    # ascending parts a'_1 <= ... <= a'_r make a'_k + k strictly increasing
    ascending = sorted(lam.parts)
    right = {a + k for k, a in enumerate(ascending, start=1)}
    n = lam.rows + lam.level
    return DiagramString(tuple("R" if i in right else "L" for i in range(1, n + 1)))


def rotate(lam: YoungDiagram) -> YoungDiagram:
    """Elementary rotation: prepend a full row of length l, drop the last (empty) row."""
    if lam.parts[-1] != 0:
        raise DiagramError(f"rotation needs an empty last row, got {lam}")
    return YoungDiagram((lam.level,) + lam.parts[:-1], lam.rows, lam.level)


def unrotate(lam: YoungDiagram) -> YoungDiagram:
    """Inverse of :func:`rotate`; the empty diagram is read as the full rectangle."""
    if lam.is_empty():
        lam = full(lam.rows, lam.level)
    if lam.parts[0] != lam.level:
        raise DiagramError(f"inverse rotation needs a full first row, got {lam}")
    return YoungDiagram(lam.parts[1:] + (0,), lam.rows, lam.level)


def add_column(lam: YoungDiagram) -> YoungDiagram:
    """Prepend a full column of height r (rotation of the transpose)."""
    if lam.parts[0] == lam.level:
        raise DiagramError(f"no room for another column in {lam}")
    return YoungDiagram(tuple(a + 1 for a in lam.parts), lam.rows, lam.level)


def remove_column(lam: YoungDiagram) -> YoungDiagram:
    """Inverse of :func:`add_column`.

    The empty diagram is read as the full rectangle (both represent the same
    weight), so removing a column from it gives ``((l-1)^r)``.
    """
    if lam.is_empty():
        lam = full(lam.rows, lam.level)
    if lam.parts[-1] == 0:
        raise DiagramError(f"{lam} has no full first column")
    return YoungDiagram(tuple(a - 1 for a in lam.parts), lam.rows, lam.level)


def tilde(lam: YoungDiagram) -> YoungDiagram:
    """Diagram in the 2l x 2r rectangle attached to an isotropic flag of type lam.

    Completing ``E_1 <= ... <= E_l`` by the orthogonals ``E_l^perp <= ... <= E_1^perp``
    gives a flag with dimensions ``{b_j} u {2r - b_j}``; these are the column
    heights of the returned diagram ``(l + a_1, ..., l + a_r, l - a_r, ..., l - a_1)``.
    """
    l = lam.level
    top = tuple(l + a for a in lam.parts)
    bottom = tuple(l - a for a in reversed(lam.parts))
    return YoungDiagram(top + bottom, 2 * lam.rows, 2 * l)


def all_diagrams(r: int, l: int) -> Iterator[YoungDiagram]:
    """Every diagram in the l x r rectangle, via index sets (C(r+l, r) of them)."""
    for I in combinations(range(1, r + l + 1), r):
        yield diagram_from_index_set(I, r, l)


@dataclass(frozen=True)
class WeightSystem:
    """Diagrams attached to marked points, all in the same rectangle."""

    diagrams: tuple[YoungDiagram, ...]
    rows: int
    level: int

    def __post_init__(self):
        for lam in self.diagrams:
            if (lam.rows, lam.level) != (self.rows, self.level):
                raise DiagramError(
                    f"diagram {lam} does not live in the {self.level}x{self.rows} rectangle"
                )

    @classmethod
    def of(cls, diagrams: Iterable[YoungDiagram | Sequence[int]], r: int, l: int) -> "WeightSystem":
        ds = tuple(d if isinstance(d, YoungDiagram) else make_diagram(d, r, l) for d in diagrams)
        return cls(ds, r, l)

    @property
    def n(self) -> int:
        return len(self.diagrams)

    @property
    def total_size(self) -> int:
        return sum(d.size for d in self.diagrams)

    def __iter__(self):
        return iter(self.diagrams)

    def __len__(self):
        return len(self.diagrams)

    def transpose(self) -> "WeightSystem":
        return WeightSystem(tuple(transpose(d) for d in self.diagrams), self.level, self.rows)

    def conjugate(self) -> "WeightSystem":
        return WeightSystem(tuple(conjugate(d) for d in self.diagrams), self.rows, self.level)

    def replace(self, index: int, lam: YoungDiagram) -> "WeightSystem":
        ds = list(self.diagrams)
        ds[index] = lam
        return WeightSystem(tuple(ds), self.rows, self.level)

    def extended(self, extra: Iterable[YoungDiagram]) -> "WeightSystem":
        return WeightSystem(self.diagrams + tuple(extra), self.rows, self.level)

    def to_dict(self) -> dict:
        return {
            "r": self.rows,
            "l": self.level,
            "n": self.n,
            "diagrams": [d.to_text() for d in self.diagrams],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def parse_weights(payload: str | list | dict, r: int | None = None, l: int | None = None) -> WeightSystem:
    """Read a weight system from JSON.

    Accepts either an object ``{"r", "l", "n", "diagrams": [...]}`` or a bare
    array of diagram strings, in which case ``r`` and ``l`` must be supplied.
    """
    data = json.loads(payload) if isinstance(payload, str) else payload
    if isinstance(data, dict):
        try:
            r_, l_ = int(data["r"]), int(data["l"])
            texts = data.get("diagrams", [])
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"weight system object needs integer r, l: {exc}") from exc
        if r is not None and r != r_ or l is not None and l != l_:
            raise DiagramError(f"weight system is for (r, l) = ({r_}, {l_}), expected ({r}, {l})")
        r, l = r_, l_
        if "n" in data and int(data["n"]) != len(texts):
            raise DiagramError(f"n = {data['n']} but {len(texts)} diagrams given")
    elif isinstance(data, list):
        if r is None or l is None:
            raise DiagramError("a bare diagram array needs r and l")
        texts = data
    else:
        raise DiagramError("weights must be a JSON array or object")
    diagrams = []
    for t in texts:
        if isinstance(t, str):
            diagrams.append(parse_diagram(t, r, l))
        elif isinstance(t, list):
            diagrams.append(make_diagram(t, r, l))
        else:
            raise DiagramError(f"cannot read diagram {t!r}")
    return WeightSystem(tuple(diagrams), r, l)
