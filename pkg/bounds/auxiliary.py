"""
Auxiliary inequalities the Sombor bounds are chained from:
F >= M1^2 / (2m) and M1 >= 4m^2 / n.
"""

from typing import List, Optional

from state import BoundCheck, Direction
from .base_bound import BaseBound, GraphFacts


class AuxForgottenBound(BaseBound):
    """F(G) >= M1(G)^2 / (2m).

    Tight exactly when every non-isolated vertex has the same degree
    (Cauchy-Schwarz over the non-isolated degrees).
    """

    bound_ids = ("B0a",)
    uses_alpha = False

    def __init__(self):
        super().__init__("aux_forgotten")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float] = None, printed: bool = False) -> List[BoundCheck]:
        self.require_edges(facts)
        m = facts.graph.m
        return [
            self.make_check(
                "B0a",
                facts,
                None,
                lhs=facts.forgotten,
                rhs=facts.first_zagreb ** 2 / (2 * m),
                direction=Direction.GE,
                equality_predicted=facts.profile.is_degree_uniform_on_edges,
            )
        ]


class AuxZagrebBound(BaseBound):
    """M1(G) >= 4m^2 / n, tight iff G is regular."""

    bound_ids = ("B0b",)
    uses_alpha = False

    def __init__(self):
        super().__init__("aux_zagreb")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float] = None, printed: bool = False) -> List[BoundCheck]:
        self.require_vertices(facts, 1)
        n, m = facts.graph.n, facts.graph.m
        return [
            self.make_check(
                "B0b",
                facts,
                None,
                lhs=facts.first_zagreb,
                rhs=4 * m * m / n,
                direction=Direction.GE,
                equality_predicted=facts.profile.is_regular,
            )
        ]
