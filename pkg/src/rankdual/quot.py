"""Vafa-Intriligator intersection numbers on Quot schemes, and a Pieri-based LR oracle."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import gcd

from .cyclo import CycloNum, as_rational, inverse, power, zeta_pow
from .diagrams import WeightSystem, YoungDiagram, conjugate, transpose
from .schur import EvalPoint, elementary_symmetric, jacobi_trudi_eval
from .verlinde import IntegralityError, VerlindeInstance, verlinde_twisted


class QuotError(ValueError):
    pass


def quot_dimension(r: int, l: int, g: int, n: int, d: int) -> int:
    return l * d + r * l * (n + 1 - g)


@dataclass(frozen=True)
class IntersectionInstance:
    """Top intersection of the classes a_mu over the Quot scheme; ``n`` is the number of points."""

    r: int
    l: int
    g: int
    d: int
    mu: WeightSystem

    def __post_init__(self):
        if self.r < 1 or self.l < 1 or self.g < 0:
            raise QuotError(f"need r, l >= 1 and g >= 0, got r={self.r} l={self.l} g={self.g}")
        if (self.mu.rows, self.mu.level) != (self.r, self.l):
            raise QuotError(f"mu diagrams must live in the {self.l}x{self.r} rectangle")
        expected = quot_dimension(self.r, self.l, self.g, self.n, self.d)
        if self.mu.total_size != expected:
            raise QuotError(
                f"classes have total degree {self.mu.total_size} but the Quot scheme "
                f"has dimension ld + rl(n+1-g) = {expected}"
            )

    @property
    def n(self) -> int:
        return self.mu.n

    @property
    def N(self) -> int:
        return self.r + self.l


@lru_cache(maxsize=1 << 14)
def _measure(N: int, T: tuple[int, ...], e: int) -> CycloNum:
    """(prod_t zeta^t * prod_{t != u} (zeta^t - zeta^u))^e, ordered pairs."""
    base = zeta_pow(N, sum(T))
    for t in T:
        zt = zeta_pow(N, t)
        for u in T:
            if u != t:
                base = base * (zt - zeta_pow(N, u))
    return power(base, e)


@lru_cache(maxsize=1 << 16)
def _class_value(mu: YoungDiagram, N: int, T: tuple[int, ...]) -> CycloNum:
    # a_mu at the Chern roots zeta^T is the Schur value of mu^T, written in e_1..e_l
    e = elementary_symmetric(EvalPoint(N, T).values(), N)
    return jacobi_trudi_eval(transpose(mu), e)


def intersection_sum(inst: IntersectionInstance, root: int = 1) -> Fraction:
    N, l = inst.N, inst.l
    if gcd(root, N) != 1:
        raise QuotError(f"root exponent {root} is not coprime to {N}")
    total = CycloNum.zero(N)
    for T0 in combinations(range(N), l):
        T = tuple(sorted((root * t) % N for t in T0))
        term = _measure(N, T, 1 - inst.g)
        for mu in inst.mu:
            if term.is_zero():
                break
            if not mu.is_empty():
                term = term * _class_value(mu, N, T)
        total = total + term
    value = as_rational(total)
    if value is None:
        raise IntegralityError(f"intersection sum is not rational: {total!r}")
    return value * Fraction(N) ** (l * (inst.g - 1))


def intersection_number(inst: IntersectionInstance, root: int = 1) -> int:
    value = intersection_sum(inst, root)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(
            f"intersection number for r={inst.r} l={inst.l} g={inst.g} d={inst.d} "
            f"mu=[{';'.join(m.to_text() for m in inst.mu)}] is {value}"
        )
    return int(value)


@dataclass(frozen=True)
class VIReport:
    r: int
    l: int
    g: int
    n: int
    d: int
    intersection: int
    verlinde: int

    @property
    def ok(self) -> bool:
        return self.intersection == self.verlinde


def vi_equals_verlinde(r: int, l: int, g: int, n: int, d: int, lam: WeightSystem) -> VIReport:
    """Integrate a_{lam*} over Quot and compare with the twisted number of (l, r, lam^T)."""
    if lam.n != n:
        raise QuotError(f"n = {n} but {lam.n} diagrams given")
    vi = intersection_number(IntersectionInstance(r, l, g, d, lam.conjugate()))
    tw = verlinde_twisted(VerlindeInstance(l, r, g, lam.transpose()))
    return VIReport(r, l, g, n, d, vi, tw)


def three_point_degree_zero(lam: YoungDiagram, mu: YoungDiagram, nu: YoungDiagram) -> int:
    """Genus-0 three-point number with the Quot degree chosen so that the map degree is zero."""
    r, l = lam.rows, lam.level
    ws = WeightSystem((lam, mu, nu), r, l)
    return intersection_number(IntersectionInstance(r, l, 0, -3 * r, ws))


# --- Littlewood-Richardson oracle: truncated symmetric-function arithmetic ---

Partition = tuple[int, ...]


def _strip(p: Partition) -> Partition:
    return tuple(a for a in p if a)


def _horizontal_strips(p: Partition, k: int, max_rows: int, max_col: int):
    """Partitions obtained from p by adding a horizontal strip of k boxes, inside the box."""
    rows = list(p) + [0]
    if len(rows) > max_rows:
        rows = rows[:max_rows]
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(rows):
            if left == 0:
                out.append(_strip(tuple(acc)))
            return
        cap = max_col if i == 0 else p[i - 1] if i - 1 < len(p) else 0
        room = min(cap - rows[i], left)
        for add in range(room, -1, -1):
            rec(i + 1, left - add, acc + [rows[i] + add])

    rec(0, k, [])
    return out


def _times_h(f: dict, k: int, max_rows: int, max_col: int) -> dict:
    if k < 0:
        return {}
    out = defaultdict(int)
    for p, c in f.items():
        for q in _horizontal_strips(p, k, max_rows, max_col):
            out[q] += c
    return {p: c for p, c in out.items() if c}


def _sign(perm: tuple[int, ...]) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def lr_product(lam: Partition, mu: Partition, max_rows: int, max_col: int) -> dict:
    """s_lam * s_mu in the quotient spanned by partitions inside max_rows x max_col.

    s_mu is expanded as det(h_{mu_i - i + j}) and applied to s_lam one h at a time.
    """
    lam, mu = _strip(lam), _strip(mu)
    k = len(mu)
    result = defaultdict(int)
    for perm in permutations(range(k)):
        degrees = [mu[i] - i + perm[i] for i in range(k)]
        if any(x < 0 for x in degrees):
            continue
        f = {lam: 1}
        for x in degrees:
            f = _times_h(f, x, max_rows, max_col)
            if not f:
                break
        sgn = _sign(perm)
        for p, c in f.items():
            result[p] += sgn * c
    return {p: c for p, c in result.items() if c}


def lr_oracle(lam: YoungDiagram, mu: YoungDiagram, nu: YoungDiagram) -> int:
    """Coefficient of s_{nu*} in s_lam s_mu, inside the l x r rectangle."""
    r, l = lam.rows, lam.level
    target = _strip(conjugate(nu).parts)
    return lr_product(lam.parts, mu.parts, r, l).get(target, 0)
