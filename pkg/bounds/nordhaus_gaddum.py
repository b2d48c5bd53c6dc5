"""
Nordhaus-Gaddum relations for SO_alpha(G) + SO_alpha(complement of G).
"""

from typing import List, Optional

from state import BoundCheck, Direction
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts


class NordhausGaddumBound(BaseBound):
    """
    alpha > 0:     B4.1a  S <= 2^(alpha/2 - 1) n (n-1)^(alpha+1), tight iff G is K_n or edgeless
    alpha >= 1:    B4.1b  S >= n (n-1)^(1+alpha) / 2^(1+alpha), strict
    0 < alpha < 1: B4.1c  S >= n^(alpha/2) (n-1)^(3 alpha/2) / 2^(3 alpha/2), strict
    alpha < 0:     B4.2a  S >= 2^(alpha/2 - 1) n (n-1)^(alpha+1), tight iff G is K_n or edgeless
                   B4.2b  S <  2^(alpha/2) n (n-1)
    """

    bound_ids = ("B4.1a", "B4.1b", "B4.1c", "B4.2a", "B4.2b")

    def __init__(self):
        super().__init__("nordhaus_gaddum")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        self.require_vertices(facts, 2)
        if alpha == 0:
            raise BoundNotApplicable("no claim at alpha=0")
        n, m = facts.graph.n, facts.graph.m
        total = facts.sombor(alpha) + facts.complement_sombor(alpha)
        extremal = m == 0 or m == n * (n - 1) // 2
        complete_value = 2 ** (alpha / 2 - 1) * n * (n - 1) ** (alpha + 1)

        checks: List[BoundCheck] = []
        if alpha > 0:
            checks.append(self.make_check("B4.1a", facts, alpha, total, complete_value, Direction.LE, extremal))
            if alpha >= 1:
                rhs = n * (n - 1) ** (1 + alpha) / 2 ** (1 + alpha)
                checks.append(self.make_check("B4.1b", facts, alpha, total, rhs, Direction.GE, False))
            else:
                rhs = n ** (alpha / 2) * (n - 1) ** (3 * alpha / 2) / 2 ** (3 * alpha / 2)
                checks.append(self.make_check("B4.1c", facts, alpha, total, rhs, Direction.GE, False))
        else:
            checks.append(self.make_check("B4.2a", facts, alpha, total, complete_value, Direction.GE, extremal))
            upper = 2 ** (alpha / 2) * n * (n - 1)
            checks.append(self.make_check("B4.2b", facts, alpha, total, upper, Direction.LT, False))
        return checks
