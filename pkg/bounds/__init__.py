"""
Bound checkers package initialization.
"""

from typing import List

from graph_core import Graph
from state import BoundCheck
from .auxiliary import AuxForgottenBound, AuxZagrebBound
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts, tolerance
from .corpus import ALL_BOUND_IDS, check_graph, default_checkers, resolve_bound_ids, verify_corpus
from .extremal import ExtremalBound
from .forgotten import SomborForgottenBound, SomborOrderSizeBound
from .nordhaus_gaddum import NordhausGaddumBound
from .randic import SomborRandicBound, sombor_second_zagreb_bounds
from .sum_connectivity import SomborChiBound, sombor_first_zagreb_bounds


def check_aux_forgotten(graph: Graph) -> BoundCheck:
    return AuxForgottenBound().check(graph)[0]


def check_aux_zagreb(graph: Graph) -> BoundCheck:
    return AuxZagrebBound().check(graph)[0]


def check_sombor_forgotten(graph: Graph, alpha: float, printed: bool = False) -> BoundCheck:
    return SomborForgottenBound().check(graph, alpha, printed)[0]


def check_sombor_nm(graph: Graph, alpha: float, printed: bool = False) -> BoundCheck:
    return SomborOrderSizeBound().check(graph, alpha, printed)[0]


def check_theorem2(graph: Graph, alpha: float) -> BoundCheck:
    return ExtremalBound().check(graph, alpha)[0]


def check_nordhaus_gaddum(graph: Graph, alpha: float) -> List[BoundCheck]:
    return NordhausGaddumBound().check(graph, alpha)


def check_sombor_randic(graph: Graph, alpha: float, printed: bool = False) -> List[BoundCheck]:
    """[lower (B5.1), upper (B5.2)]."""
    return SomborRandicBound().check(graph, alpha, printed)


def check_sombor_chi(graph: Graph, alpha: float, printed: bool = False) -> List[BoundCheck]:
    """[left (B6.1), right (B6.2)]."""
    return SomborChiBound().check(graph, alpha, printed)


__all__ = [
    "ALL_BOUND_IDS",
    "AuxForgottenBound",
    "AuxZagrebBound",
    "BaseBound",
    "BoundNotApplicable",
    "ExtremalBound",
    "GraphFacts",
    "NordhausGaddumBound",
    "SomborChiBound",
    "SomborForgottenBound",
    "SomborOrderSizeBound",
    "SomborRandicBound",
    "check_aux_forgotten",
    "check_aux_zagreb",
    "check_graph",
    "check_nordhaus_gaddum",
    "check_sombor_chi",
    "check_sombor_forgotten",
    "check_sombor_nm",
    "check_sombor_randic",
    "check_theorem2",
    "sombor_first_zagreb_bounds",
    "sombor_second_zagreb_bounds",
    "default_checkers",
    "resolve_bound_ids",
    "tolerance",
    "verify_corpus",
]
