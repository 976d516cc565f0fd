"""Weight and degree bookkeeping for rank-level duality instances.

An instance is (r, l, g, d, dd, weights): d is the degree on the rank-r side,
dd the degree on the rank-l side.  Duality and rotations act on the weights and
degrees; :func:`normalize` brings an admissible instance to dd = 0 with a
degree large and divisible enough for the Quot-scheme comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import lcm

from .diagrams import (
    WeightSystem,
    add_column,
    empty,
    remove_column,
    rotate,
    unrotate,
)
from .verlinde import VerlindeInstance, verlinde_twisted

R_SIDE = "r"
L_SIDE = "l"


class DualityError(ValueError):
    pass


class InadmissibleError(DualityError):
    pass


@dataclass(frozen=True)
class DualityInstance:
    r: int
    l: int
    g: int
    d: int
    dd: int
    weights: WeightSystem

    def __post_init__(self):
        if self.r < 1 or self.l < 1 or self.g < 0:
            raise DualityError(f"need r, l >= 1 and g >= 0, got r={self.r} l={self.l} g={self.g}")
        if (self.weights.rows, self.weights.level) != (self.r, self.l):
            raise DualityError(f"weights must live in the {self.l}x{self.r} rectangle")

    @property
    def n(self) -> int:
        return self.weights.n

    @property
    def total_weight(self) -> int:
        return self.weights.total_size

    def residue(self) -> int:
        """(|weights| + l d + r dd) mod rl; zero exactly when admissible."""
        return (self.total_weight + self.l * self.d + self.r * self.dd) % (self.r * self.l)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "l": self.l,
            "g": self.g,
            "n": self.n,
            "d": self.d,
            "dd": self.dd,
            "weights": [lam.to_text() for lam in self.weights],
        }


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    residue: int
    delta: Fraction
    line_degree: int | None


def admissible(inst: DualityInstance) -> Admissibility:
    rl = inst.r * inst.l
    res = inst.residue()
    delta = Fraction(inst.total_weight, rl)
    line_degree = None
    if res == 0:
        line_degree = inst.g - 1 - (inst.l * inst.d + inst.r * inst.dd + inst.total_weight) // rl
    return Admissibility(res == 0, res, delta, line_degree)


def require_admissible(inst: DualityInstance) -> None:
    res = inst.residue()
    if res:
        raise InadmissibleError(
            f"|weights| + l*d + r*dd = {inst.total_weight + inst.l * inst.d + inst.r * inst.dd} "
            f"is not divisible by rl = {inst.r * inst.l} (residue {res})"
        )


def parabolic_degree(deg: int, weights: WeightSystem, l: int) -> Fraction:
    return deg + Fraction(weights.total_size, l)


def parabolic_slope(deg: int, weights: WeightSystem, r: int, l: int) -> Fraction:
    """(deg + |weights|/l) / r, i.e. the ordinary slope plus |weights|/(rl)."""
    return parabolic_degree(deg, weights, l) / r


def apply_duality(inst: DualityInstance) -> DualityInstance:
    return replace(inst, d=-inst.d, dd=-inst.dd, weights=inst.weights.conjugate())


def apply_rotation(
    inst: DualityInstance, index: int, side: str = R_SIDE, inverse: bool = False
) -> DualityInstance:
    """One elementary rotation of the diagram at ``index``.

    r-side: the diagram gains a full top row and d drops by one.
    l-side: the diagram gains a full first column and dd drops by one.
    ``inverse=True`` undoes the step.
    """
    if not 0 <= index < inst.n:
        raise DualityError(f"point index {index} out of range for {inst.n} points")
    lam = inst.weights.diagrams[index]
    step = 1 if inverse else -1
    if side == R_SIDE:
        new = unrotate(lam) if inverse else rotate(lam)
        return replace(inst, d=inst.d + step, weights=inst.weights.replace(index, new))
    if side == L_SIDE:
        new = remove_column(lam) if inverse else add_column(lam)
        return replace(inst, dd=inst.dd + step, weights=inst.weights.replace(index, new))
    raise DualityError(f"side must be 'r' or 'l', got {side!r}")


@dataclass(frozen=True)
class NormalizationPlan:
    added_points: int
    r_side_rotations: tuple[int, ...]
    l_side_rotations: tuple[int, ...]
    twist: int

    def __post_init__(self):
        if len(self.r_side_rotations) != self.added_points or len(self.l_side_rotations) != self.added_points:
            raise DualityError("rotation counts must be given for every added point")

    def is_identity(self) -> bool:
        return self.added_points == 0 and self.twist == 0

    def to_dict(self) -> dict:
        return {
            "added_points": self.added_points,
            "r_side_rotations": list(self.r_side_rotations),
            "l_side_rotations": list(self.l_side_rotations),
            "twist": self.twist,
        }


def replay(inst: DualityInstance, plan: NormalizationPlan) -> DualityInstance:
    """Append the empty points, rotate each (l-side first, then r-side), then twist."""
    r, l = inst.r, inst.l
    cur = replace(inst, weights=inst.weights.extended([empty(r, l)] * plan.added_points))
    for k in range(plan.added_points):
        idx = inst.n + k
        ls = plan.l_side_rotations[k]
        for _ in range(abs(ls)):
            cur = apply_rotation(cur, idx, L_SIDE, inverse=ls < 0)
        for _ in range(plan.r_side_rotations[k]):
            cur = apply_rotation(cur, idx, R_SIDE)
    return replace(cur, d=cur.d + r * plan.twist)


def _needs_padding(d: int, n: int, r: int, N: int, threshold: int) -> bool:
    total = d + r * n
    return total <= 0 or total < threshold or total % N != 0


def normalize(inst: DualityInstance, threshold: int = 1) -> tuple[DualityInstance, NormalizationPlan]:
    """Deterministic normalization schedule.

    1. one fresh empty point per unit of |dd|, each with one l-side rotation
       (inverse rotations when dd < 0), so that dd becomes 0;
    2. ``d mod r`` fresh points with one r-side rotation each, so r divides d;
    3. the unique twist making |nu*| = n' r l + l d' + r l (1 - g);
    4. empty points until d' + r n' is positive, at least ``threshold`` and
       divisible by r + l.
    """
    require_admissible(inst)
    r, l, N = inst.r, inst.l, inst.r + inst.l
    l_rot = [1 if inst.dd > 0 else -1] * abs(inst.dd)
    r_rot = [0] * abs(inst.dd)
    d_mod = inst.d % r
    l_rot += [0] * d_mod
    r_rot += [1] * d_mod

    # sizes after steps 1-2, without building the diagrams
    size = inst.total_weight
    size += r * inst.dd if inst.dd > 0 else (r * l - r) * (-inst.dd)
    size += l * d_mod
    d_rot = inst.d - d_mod
    numerator = r * l * (inst.g - 1) - size - l * d_rot
    assert numerator % (r * l) == 0
    twist = numerator // (r * l)
    d_final = d_rot + r * twist

    n_final = inst.n + len(l_rot)
    pad = 0
    while _needs_padding(d_final, n_final + pad, r, N, threshold):
        pad += 1
        if pad > max(threshold, 0) + abs(d_final) + N * N:
            raise DualityError("normalization padding did not terminate")
    plan = NormalizationPlan(
        added_points=len(l_rot) + pad,
        r_side_rotations=tuple(r_rot + [0] * pad),
        l_side_rotations=tuple(l_rot + [0] * pad),
        twist=twist,
    )
    return replay(inst, plan), plan


@dataclass(frozen=True)
class PostconditionReport:
    dd_zero: bool
    weight_identity: bool
    degree_positive_multiple: bool
    above_threshold: bool
    divisible_by_N: bool

    @property
    def ok(self) -> bool:
        return all(
            (
                self.dd_zero,
                self.weight_identity,
                self.degree_positive_multiple,
                self.above_threshold,
                self.divisible_by_N,
            )
        )


def check_postconditions(out: DualityInstance, threshold: int = 1) -> PostconditionReport:
    r, l, g = out.r, out.l, out.g
    conj_size = out.n * r * l - out.total_weight
    total = out.d + r * out.n
    return PostconditionReport(
        dd_zero=out.dd == 0,
        weight_identity=conj_size == out.n * r * l + l * out.d + r * out.dd + r * l * (1 - g),
        degree_positive_multiple=total > 0 and total % r == 0,
        above_threshold=total >= threshold,
        divisible_by_N=total % lcm(r, r + l) == 0,
    )


@dataclass(frozen=True)
class Verdict:
    instance: DualityInstance
    normalized: DualityInstance
    plan: NormalizationPlan
    r_side: int
    l_side: int

    @property
    def equal(self) -> bool:
        return self.r_side == self.l_side

    def to_dict(self) -> dict:
        return {
            "instance": self.instance.to_dict(),
            "normalized": self.normalized.to_dict(),
            "plan": self.plan.to_dict(),
            "r_side": str(self.r_side),
            "l_side": str(self.l_side),
            "equal": self.equal,
        }


def dimension_verdict(inst: DualityInstance, threshold: int = 1) -> Verdict:
    out, plan = normalize(inst, threshold)
    nu = out.weights
    a = verlinde_twisted(VerlindeInstance(out.r, out.l, out.g, nu))
    b = verlinde_twisted(VerlindeInstance(out.l, out.r, out.g, nu.transpose()))
    return Verdict(inst, out, plan, a, b)


def instance_from_json(payload: str | dict) -> DualityInstance:
    from .diagrams import parse_weights

    data = json.loads(payload) if isinstance(payload, str) else payload
    try:
        r, l, g = int(data["r"]), int(data["l"]), int(data["g"])
        d, dd = int(data.get("d", 0)), int(data.get("dd", 0))
    except (KeyError, TypeError, ValueError) as exc:
        raise DualityError(f"instance needs integer r, l, g (and optional d, dd): {exc}") from exc
    weights = parse_weights(data.get("weights", []), r, l)
    if "n" in data and int(data["n"]) != weights.n:
        raise DualityError(f"n = {data['n']} but {weights.n} diagrams given")
    return DualityInstance(r, l, g, d, dd, weights)
