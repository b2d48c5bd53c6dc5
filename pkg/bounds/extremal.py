"""
Extremal bounds on SO_alpha in terms of n, m and F, one sub-bound per
exponent regime.
"""

from typing import List, Optional

from state import BoundCheck, Direction
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts


class ExtremalBound(BaseBound):
    """
    B3.1 (0 < alpha < 1): SO_alpha >= F^(alpha/2), tight iff m <= 1.
    B3.2 (alpha < 0):     SO_alpha <= 2^(alpha/2 - 1) n (n - 1), tight iff G = K_2.
    B3.3 (alpha > 1):     SO_alpha <= 2^(alpha/2) m (n - 1)^alpha, tight iff G is K_n or edgeless.
    """

    bound_ids = ("B3.1", "B3.2", "B3.3")

    def __init__(self):
        super().__init__("extremal")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        self.require_vertices(facts, 2)
        n, m = facts.graph.n, facts.graph.m
        lhs = facts.sombor(alpha)

        if 0 < alpha < 1:
            rhs = facts.forgotten ** (alpha / 2)
            return [self.make_check("B3.1", facts, alpha, lhs, rhs, Direction.GE, m <= 1)]
        if alpha < 0:
            rhs = 2 ** (alpha / 2 - 1) * n * (n - 1)
            return [self.make_check("B3.2", facts, alpha, lhs, rhs, Direction.LE, n == 2 and m == 1)]
        if alpha > 1:
            rhs = 2 ** (alpha / 2) * m * (n - 1) ** alpha
            complete_or_empty = m == 0 or m == n * (n - 1) // 2
            return [self.make_check("B3.3", facts, alpha, lhs, rhs, Direction.LE, complete_or_empty)]
        raise BoundNotApplicable(f"no claim at alpha={alpha}")
