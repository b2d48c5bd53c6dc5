"""
Base checker class for the Sombor index bounds.
"""

import logging
from abc import ABC, abstractmethod
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import graph_core
import indices
from graph_core import DegreeProfile, Graph, GraphClassification
from graph_io import serialize_graph6
from state import EQUALITY_TOLERANCE, BoundCheck, BoundForm, Direction

logger = logging.getLogger(__name__)


class BoundNotApplicable(ValueError):
    """The bound makes no claim for this graph or exponent."""


class GraphFacts:
    """Per-graph quantities shared by every checker run on the same graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self._sombor: Dict[float, float] = {}
        self._complement_sombor: Dict[float, float] = {}

    @cached_property
    def graph6(self) -> str:
        return serialize_graph6(self.graph)

    @cached_property
    def profile(self) -> DegreeProfile:
        return graph_core.degree_profile(self.graph)

    @cached_property
    def classification(self) -> GraphClassification:
        return graph_core.classify(self.graph)

    @cached_property
    def complement(self) -> Graph:
        return graph_core.complement(self.graph)

    @cached_property
    def forgotten(self) -> float:
        return indices.forgotten(self.graph)

    @cached_property
    def first_zagreb(self) -> float:
        return indices.first_zagreb(self.graph)

    @cached_property
    def edges_balanced(self) -> bool:
        return graph_core.edges_balanced(self.graph, self.profile)

    def sombor(self, alpha: float) -> float:
        if alpha not in self._sombor:
            self._sombor[alpha] = indices.general_sombor(self.graph, alpha)
        return self._sombor[alpha]

    def complement_sombor(self, alpha: float) -> float:
        if alpha not in self._complement_sombor:
            self._complement_sombor[alpha] = indices.general_sombor(self.complement, alpha)
        return self._complement_sombor[alpha]


def tolerance(lhs: float, rhs: float) -> float:
    return EQUALITY_TOLERANCE * max(1.0, abs(lhs), abs(rhs))


class BaseBound(ABC):
    """Base class for every bound checker.

    A checker owns one bound (or a family of sub-inequalities) and emits one
    BoundCheck per sub-inequality that applies to the graph and exponent.
    """

    bound_ids: Tuple[str, ...] = ()
    uses_alpha: bool = True

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def evaluate(self, facts: GraphFacts, alpha: Optional[float], printed: bool = False) -> List[BoundCheck]:
        """Evaluate the bound, raising BoundNotApplicable when it makes no claim."""

    def check(self, graph: Graph, alpha: Optional[float] = None, printed: bool = False) -> List[BoundCheck]:
        return self.evaluate(GraphFacts(graph), alpha, printed)

    def require_edges(self, facts: GraphFacts):
        if facts.graph.m < 1:
            raise BoundNotApplicable(f"{self.name} needs at least one edge")

    def require_vertices(self, facts: GraphFacts, minimum: int):
        if facts.graph.n < minimum:
            raise BoundNotApplicable(f"{self.name} needs n >= {minimum}")

    def make_check(
        self,
        bound_id: str,
        facts: GraphFacts,
        alpha: Optional[float],
        lhs: float,
        rhs: float,
        direction: Direction,
        equality_predicted: bool,
        form: BoundForm = BoundForm.PRINTED,
    ) -> BoundCheck:
        slack = lhs - rhs if direction is Direction.GE else rhs - lhs
        eps = tolerance(lhs, rhs)
        holds = slack > eps if direction is Direction.LT else slack >= -eps
        return BoundCheck(
            bound_id=bound_id,
            alpha=alpha,
            n=facts.graph.n,
            m=facts.graph.m,
            graph6=facts.graph6,
            lhs=lhs,
            rhs=rhs,
            direction=direction,
            slack=slack,
            holds=holds,
            equality_predicted=equality_predicted,
            equality_observed=abs(slack) <= eps,
            form=form,
        )
