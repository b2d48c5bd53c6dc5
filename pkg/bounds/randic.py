"""
SO_alpha against the general Randić index.
"""

from typing import List, Optional, Tuple

import indices
from graph_core import Graph
from state import BoundCheck, BoundForm, Direction
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts


class SomborRandicBound(BaseBound):
    """2^(a/2) R_a / Delta^a <= SO_a <= 2^(a/2) R_a / delta^a for a > 0.

    Each edge term is (d(u)d(v))^a (1/d(u)^2 + 1/d(v)^2)^(a/2), so for a < 0
    the roles of Delta and delta swap. Delta and delta range over
    non-isolated vertices.
    """

    bound_ids = ("B5.1", "B5.2")

    def __init__(self):
        super().__init__("sombor_randic")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        self.require_edges(facts)
        big = facts.profile.max_positive_degree
        small = facts.profile.min_positive_degree
        form = BoundForm.PRINTED
        if alpha == 0:
            form = BoundForm.IDENTITY
        elif alpha < 0 and not printed:
            big, small = small, big
            form = BoundForm.SWAPPED

        scale = 2 ** (alpha / 2) * indices.general_randic(facts.graph, alpha)
        so = facts.sombor(alpha)
        predicted = form is BoundForm.IDENTITY or facts.profile.is_degree_uniform_on_edges
        return [
            self.make_check("B5.1", facts, alpha, so, scale / big ** alpha, Direction.GE, predicted, form),
            self.make_check("B5.2", facts, alpha, so, scale / small ** alpha, Direction.LE, predicted, form),
        ]


def sombor_second_zagreb_bounds(graph: Graph) -> Tuple[float, float]:
    """(sqrt(2) M2 / Delta, sqrt(2) M2 / delta), the alpha = 1 case evaluated directly."""
    if graph.m < 1:
        raise BoundNotApplicable("the alpha = 1 bounds need at least one edge")
    facts = GraphFacts(graph)
    m2 = indices.second_zagreb(graph)
    root2 = 2 ** 0.5
    return (
        root2 * m2 / facts.profile.max_positive_degree,
        root2 * m2 / facts.profile.min_positive_degree,
    )
