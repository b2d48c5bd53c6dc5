"""
SO_alpha against the forgotten index (Jensen on x^(alpha/2)) and its
(n, m) consequence.
"""

from typing import List, Optional, Tuple

from state import BoundCheck, BoundForm, Direction
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts


def _jensen_regime(alpha: float, printed: bool) -> Tuple[Direction, BoundForm]:
    """Direction of SO_alpha vs m^(1-alpha/2) F^(alpha/2).

    x^(alpha/2) is convex for alpha <= 0 or alpha >= 2 and concave in between.
    The printed statement puts the switch at alpha = 1.
    """
    if printed:
        if alpha < 0 or alpha > 1:
            return Direction.GE, BoundForm.PRINTED
        if 0 < alpha < 1:
            return Direction.LE, BoundForm.PRINTED
        raise BoundNotApplicable(f"no printed claim at alpha={alpha}")
    if alpha in (0.0, 2.0):
        return Direction.GE, BoundForm.IDENTITY
    if alpha < 0 or alpha > 2:
        return Direction.GE, BoundForm.PRINTED
    if alpha < 1:
        return Direction.LE, BoundForm.PRINTED
    if alpha == 1:
        return Direction.LE, BoundForm.EXTENDED
    return Direction.LE, BoundForm.CORRECTED


class SomborForgottenBound(BaseBound):
    """SO_alpha(G) vs m^(1 - alpha/2) F(G)^(alpha/2), tight iff d(u)^2 + d(v)^2 is constant."""

    bound_ids = ("B1",)

    def __init__(self):
        super().__init__("sombor_forgotten")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        self.require_edges(facts)
        direction, form = _jensen_regime(alpha, printed)
        m = facts.graph.m
        rhs = m ** (1 - alpha / 2) * facts.forgotten ** (alpha / 2)
        predicted = form is BoundForm.IDENTITY or facts.classification.edge_sumsq_constant
        return [
            self.make_check(
                "B1", facts, alpha, facts.sombor(alpha), rhs, direction, predicted, form
            )
        ]


def _nm_regime(alpha: float, printed: bool) -> Tuple[Direction, BoundForm]:
    """Direction of SO_alpha vs 8^(alpha/2) m^(1+alpha) n^(-alpha).

    For alpha > 0 the lower bound holds throughout (AM-GM on d(u)d(v) and
    convexity of x ln x). For alpha < 0 neither direction holds: K_{1,3}
    breaks >= at alpha = -1 and K_2 + K_3 breaks <= at alpha = -2.
    """
    if printed:
        if alpha < 0 or alpha > 1:
            return Direction.GE, BoundForm.PRINTED
        if 0 < alpha < 1:
            return Direction.LE, BoundForm.PRINTED
        raise BoundNotApplicable(f"no printed claim at alpha={alpha}")
    if alpha == 0:
        return Direction.GE, BoundForm.IDENTITY
    if alpha < 0:
        raise BoundNotApplicable(f"no valid direction for alpha={alpha} < 0")
    if alpha > 1:
        return Direction.GE, BoundForm.PRINTED
    if alpha == 1:
        return Direction.GE, BoundForm.EXTENDED
    return Direction.GE, BoundForm.CORRECTED


class SomborOrderSizeBound(BaseBound):
    """SO_alpha(G) vs 8^(alpha/2) m^(1+alpha) n^(-alpha), tight iff G is regular."""

    bound_ids = ("B2",)

    def __init__(self):
        super().__init__("sombor_nm")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        self.require_edges(facts)
        direction, form = _nm_regime(alpha, printed)
        n, m = facts.graph.n, facts.graph.m
        rhs = 8 ** (alpha / 2) * m ** (1 + alpha) * n ** (-alpha)
        predicted = form is BoundForm.IDENTITY or facts.profile.is_regular
        return [
            self.make_check(
                "B2", facts, alpha, facts.sombor(alpha), rhs, direction, predicted, form
            )
        ]
