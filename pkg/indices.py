"""
Degree-based topological indices: Zagreb, forgotten, Randić, sum-connectivity
and the general Sombor index, plus closed forms for standard families.
"""

import logging
import math
from enum import Enum
from typing import Callable, Iterable, List, Sequence

from graph_core import Graph, degree_profile
from state import IndexId, IndexValue

logger = logging.getLogger(__name__)


class IndexDomainError(ValueError):
    """An index or closed form evaluated outside its domain."""


class PathVariant(str, Enum):
    CORRECTED = "corrected"
    PRINTED = "printed"


def _edge_sum(graph: Graph, term: Callable[[int, int], float]) -> float:
    degrees = degree_profile(graph).degrees
    return math.fsum(term(degrees[u], degrees[v]) for u, v in graph.edges)


# Exact integer paths

def vertex_power_sum(graph: Graph, p: int) -> int:
    """Sum of d(u)^p over non-isolated vertices, p a non-negative integer."""
    if p < 0:
        raise IndexDomainError("exact vertex power sums need p >= 0")
    return sum(d ** p for d in degree_profile(graph).degrees if d > 0)


def edge_sumsq_power_sum(graph: Graph, k: int) -> int:
    """Sum over edges of (d(u)^2 + d(v)^2)^k; equals SO_{2k} exactly."""
    if k < 0:
        raise IndexDomainError("exact edge power sums need k >= 0")
    degrees = degree_profile(graph).degrees
    return sum((degrees[u] ** 2 + degrees[v] ** 2) ** k for u, v in graph.edges)


# Zagreb family

def first_zagreb(graph: Graph) -> float:
    return float(vertex_power_sum(graph, 2))


def first_zagreb_edge_form(graph: Graph) -> float:
    degrees = degree_profile(graph).degrees
    return float(sum(degrees[u] + degrees[v] for u, v in graph.edges))


def second_zagreb(graph: Graph) -> float:
    degrees = degree_profile(graph).degrees
    return float(sum(degrees[u] * degrees[v] for u, v in graph.edges))


def general_first_zagreb(graph: Graph, p: float) -> float:
    """M1^p; isolated vertices contribute nothing for p >= 0 (including 0^0)."""
    degrees = degree_profile(graph).degrees
    if p < 0 and any(d == 0 for d in degrees):
        raise IndexDomainError(f"M1^p with p={p} is undefined on a graph with isolated vertices")
    return math.fsum(float(d) ** p for d in degrees if d > 0)


def forgotten(graph: Graph) -> float:
    return float(edge_sumsq_power_sum(graph, 1))


# Edge-sum families

def general_randic(graph: Graph, alpha: float) -> float:
    return _edge_sum(graph, lambda a, b: float(a * b) ** alpha)


def randic(graph: Graph) -> float:
    return _edge_sum(graph, lambda a, b: 1.0 / math.sqrt(a * b))


def general_sum_connectivity(graph: Graph, alpha: float) -> float:
    return _edge_sum(graph, lambda a, b: float(a + b) ** alpha)


def sum_connectivity(graph: Graph) -> float:
    return _edge_sum(graph, lambda a, b: 1.0 / math.sqrt(a + b))


def general_sombor(graph: Graph, alpha: float) -> float:
    """SO_alpha: sum over edges of (d(u)^2 + d(v)^2)^(alpha/2)."""
    half = alpha / 2
    return _edge_sum(graph, lambda a, b: float(a * a + b * b) ** half)


def sombor(graph: Graph) -> float:
    return _edge_sum(graph, lambda a, b: math.hypot(a, b))


# Closed forms

def closed_form_complete(n: int, alpha: float) -> float:
    if n < 1:
        raise IndexDomainError(f"K_n needs n >= 1, got {n}")
    if n == 1:
        return 0.0
    return 2 ** (-1 + alpha / 2) * n * (n - 1) ** (alpha + 1)


def closed_form_cycle(n: int, alpha: float) -> float:
    if n < 3:
        raise IndexDomainError(f"C_n needs n >= 3, got {n}")
    return 2 ** (3 * alpha / 2) * n


def closed_form_path(n: int, alpha: float, variant: PathVariant = PathVariant.CORRECTED) -> float:
    """SO_alpha(P_n).

    The printed variant counts each internal edge as 2 * 2^(alpha/2); an
    internal edge joins two degree-2 vertices and contributes 8^(alpha/2).
    Both variants coincide at alpha = 1.
    """
    if n < 2:
        raise IndexDomainError(f"P_n needs n >= 2, got {n}")
    if n == 2:
        return 2 ** (alpha / 2)
    pendant = 2 * 5 ** (alpha / 2)
    if PathVariant(variant) is PathVariant.PRINTED:
        return pendant + 2 * (n - 3) * 2 ** (alpha / 2)
    return pendant + (n - 3) * 2 ** (3 * alpha / 2)


def closed_form_complete_bipartite(a: int, b: int, alpha: float) -> float:
    """SO_alpha(K_{a,b}); every edge joins degree b to degree a."""
    if a < 1 or b < 1:
        raise IndexDomainError(f"K_(a,b) needs a, b >= 1, got ({a}, {b})")
    return a * b * float(a * a + b * b) ** (alpha / 2)


# Index table

def compute_indices(graph: Graph, alphas: Sequence[float], powers: Iterable[float] = (1, 2, 3)) -> List[IndexValue]:
    """Every index on one graph, ordered by index id then parameter."""
    alphas = sorted(set(float(a) for a in alphas))
    rows: List[IndexValue] = []
    for index_id in IndexId:
        if index_id is IndexId.M1:
            rows.append(IndexValue(index_id=index_id, value=first_zagreb(graph)))
        elif index_id is IndexId.M2:
            rows.append(IndexValue(index_id=index_id, value=second_zagreb(graph)))
        elif index_id is IndexId.M1P:
            for p in sorted(set(float(p) for p in powers)):
                try:
                    value = general_first_zagreb(graph, p)
                except IndexDomainError as exc:
                    logger.warning(f"Skipping M1P p={p}: {exc}")
                    continue
                rows.append(IndexValue(index_id=index_id, parameter=p, value=value))
        elif index_id is IndexId.F:
            rows.append(IndexValue(index_id=index_id, value=forgotten(graph)))
        elif index_id is IndexId.R:
            rows.append(IndexValue(index_id=index_id, value=randic(graph)))
        elif index_id is IndexId.CHI:
            rows.append(IndexValue(index_id=index_id, value=sum_connectivity(graph)))
        elif index_id is IndexId.SO:
            rows.append(IndexValue(index_id=index_id, value=sombor(graph)))
        else:
            evaluate = {
                IndexId.RALPHA: general_randic,
                IndexId.CHIALPHA: general_sum_connectivity,
                IndexId.SOALPHA: general_sombor,
            }[index_id]
            rows.extend(
                IndexValue(index_id=index_id, parameter=alpha, value=evaluate(graph, alpha))
                for alpha in alphas
            )
    return rows
