"""
SO_alpha against the general sum-connectivity index.
"""

import math
from typing import List, Optional, Tuple

import indices
from graph_core import Graph
from state import BoundCheck, BoundForm, Direction
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts


class SomborChiBound(BaseBound):
    """
    B6.1: chi_a / 2^(a/2) <= SO_a for a > 0 (reversed for a < 0), tight iff
          d(u) = d(v) on every edge.
    B6.2: SO_a <= sqrt(m Delta^a chi_a) for a > 0; for a < 0 the Radon step
          needs delta in place of Delta. Tight iff all non-isolated vertices
          share one degree.
    """

    bound_ids = ("B6.1", "B6.2")

    def __init__(self):
        super().__init__("sombor_chi")

    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        self.require_edges(facts)
        m = facts.graph.m
        chi = indices.general_sum_connectivity(facts.graph, alpha)
        so = facts.sombor(alpha)

        left_direction = Direction.GE
        extreme = facts.profile.max_positive_degree
        form = BoundForm.PRINTED
        if alpha == 0:
            form = BoundForm.IDENTITY
        elif alpha < 0 and not printed:
            left_direction = Direction.LE
            extreme = facts.profile.min_positive_degree
            form = BoundForm.SWAPPED

        identity = form is BoundForm.IDENTITY
        return [
            self.make_check(
                "B6.1", facts, alpha, so, chi / 2 ** (alpha / 2), left_direction,
                identity or facts.edges_balanced, form,
            ),
            self.make_check(
                "B6.2", facts, alpha, so, math.sqrt(m * extreme ** alpha * chi), Direction.LE,
                identity or facts.profile.is_degree_uniform_on_edges, form,
            ),
        ]


def sombor_first_zagreb_bounds(graph: Graph) -> Tuple[float, float]:
    """(M1 / sqrt(2), sqrt(m Delta M1)), the alpha = 1 case evaluated directly."""
    if graph.m < 1:
        raise BoundNotApplicable("the alpha = 1 bounds need at least one edge")
    facts = GraphFacts(graph)
    m1 = indices.first_zagreb(graph)
    return m1 / math.sqrt(2), math.sqrt(graph.m * facts.profile.max_positive_degree * m1)
