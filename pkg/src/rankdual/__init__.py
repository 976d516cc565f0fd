"""Exact Verlinde numbers, Vafa-Intriligator intersection numbers and rank-level duality checks."""

from .cyclo import CycloNum, zeta_pow
from .diagrams import WeightSystem, YoungDiagram, conjugate, make_diagram, transpose
from .duality import DualityInstance, dimension_verdict, normalize
from .quot import IntersectionInstance, intersection_number, lr_oracle
from .verlinde import (
    VerlindeInstance,
    check_rank_level,
    verlinde_gl,
    verlinde_sl,
    verlinde_twisted,
)

__all__ = [
    "CycloNum",
    "DualityInstance",
    "IntersectionInstance",
    "VerlindeInstance",
    "WeightSystem",
    "YoungDiagram",
    "check_rank_level",
    "conjugate",
    "dimension_verdict",
    "intersection_number",
    "lr_oracle",
    "make_diagram",
    "normalize",
    "transpose",
    "verlinde_gl",
    "verlinde_sl",
    "verlinde_twisted",
    "zeta_pow",
]
