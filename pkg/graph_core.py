"""
Simple-graph representation, degree queries and structural classification.
"""

from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator


class GraphError(ValueError):
    """Invalid graph construction or a violated operation precondition."""


class Graph(BaseModel):
    """Immutable finite simple graph on vertices 0..n-1."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, v):
        """Store every edge as (min, max) and collapse duplicates."""
        normalized = set()
        for pair in v:
            u, w = (int(x) for x in pair)
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, w) if u < w else (w, u))
        return frozenset(normalized)

    @model_validator(mode="after")
    def check_vertex_range(self):
        for u, v in self.edges:
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)


class DegreeProfile(BaseModel):
    """Degree sequence with its extremes."""

    model_config = ConfigDict(frozen=True)

    degrees: Tuple[int, ...]
    min_degree: int
    max_degree: int

    @property
    def positive_degrees(self) -> Tuple[int, ...]:
        return tuple(d for d in self.degrees if d > 0)

    @property
    def min_positive_degree(self) -> int:
        """Minimum degree over non-isolated vertices (0 for edgeless graphs)."""
        positive = self.positive_degrees
        return min(positive) if positive else 0

    @property
    def max_positive_degree(self) -> int:
        """Same as max_degree: an isolated vertex never raises the maximum."""
        return self.max_degree

    @property
    def distinct_degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.degrees)))

    @property
    def is_regular(self) -> bool:
        return len(self.degrees) > 0 and len(set(self.degrees)) == 1

    @property
    def is_degree_uniform_on_edges(self) -> bool:
        """True when every non-isolated vertex has the same degree (needs m >= 1)."""
        return len(set(self.positive_degrees)) == 1


class GraphKind(str, Enum):
    EMPTY = "empty"
    REGULAR = "regular"
    BIREGULAR = "bi-regular"
    BIDEGREED = "bi-degreed"
    GENERAL = "general"


class GraphClassification(BaseModel):
    """Structural verdict for a graph.

    ``parameters`` holds (k,) for a k-regular graph and (Delta, delta) for a
    bi-regular one; it is empty otherwise.
    """

    model_config = ConfigDict(frozen=True)

    kind: GraphKind
    parameters: Tuple[int, ...] = ()
    connected: bool
    bipartite: bool
    edge_sumsq_constant: bool

    def label(self) -> str:
        if self.parameters:
            return f"{self.kind.value}({','.join(str(p) for p in self.parameters)})"
        return self.kind.value


def make_graph(n: int, edge_list: Iterable[Tuple[int, int]]) -> Graph:
    """Build a simple graph, collapsing duplicate pairs."""
    if n < 1:
        raise GraphError(f"a graph needs at least one vertex, got n={n}")
    try:
        return Graph(n=n, edges=list(edge_list))
    except ValidationError as exc:
        reason = exc.errors()[0]["msg"].removeprefix("Value error, ")
        raise GraphError(reason) from exc


def degree_profile(graph: Graph) -> DegreeProfile:
    degrees = [0] * graph.n
    for u, v in graph.edges:
        degrees[u] += 1
        degrees[v] += 1
    if not degrees:
        return DegreeProfile(degrees=(), min_degree=0, max_degree=0)
    return DegreeProfile(degrees=tuple(degrees), min_degree=min(degrees), max_degree=max(degrees))


@lru_cache(maxsize=1024)
def to_networkx(graph: Graph) -> nx.Graph:
    """Frozen networkx view of ``graph`` with nodes 0..n-1 in order."""
    view = nx.Graph()
    view.add_nodes_from(range(graph.n))
    view.add_edges_from(graph.sorted_edges())
    return nx.freeze(view)


def from_networkx(view: nx.Graph) -> Graph:
    """Graph from a networkx graph; nodes are relabelled 0..n-1 in iteration order."""
    if view.is_directed() or view.is_multigraph():
        raise GraphError("only simple undirected graphs are supported")
    relabelled = nx.convert_node_labels_to_integers(view)
    return make_graph(relabelled.number_of_nodes(), relabelled.edges())


def complement(graph: Graph) -> Graph:
    return from_networkx(nx.complement(to_networkx(graph)))


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Place ``second`` after ``first``; its vertex v becomes first.n + v."""
    return from_networkx(nx.disjoint_union(to_networkx(first), to_networkx(second)))


def add_edge(graph: Graph, u: int, v: int) -> Graph:
    return make_graph(graph.n, list(graph.edges) + [(u, v)])


def is_connected(graph: Graph) -> bool:
    """K1 counts as connected."""
    if graph.n == 0:
        raise GraphError("connectivity is undefined for a graph without vertices")
    return nx.is_connected(to_networkx(graph))


def bipartition(graph: Graph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Two colour classes if the graph is bipartite, else None.

    In every component the side holding its smallest vertex goes first, so an
    isolated vertex lands in the first set.
    """
    view = to_networkx(graph)
    if not nx.is_bipartite(view):
        return None
    colour = nx.bipartite.color(view)
    first, second = set(), set()
    for component in nx.connected_components(view):
        anchor = colour[min(component)]
        for v in component:
            (first if colour[v] == anchor else second).add(v)
    return frozenset(first), frozenset(second)


def edge_sumsq_values(graph: Graph, profile: Optional[DegreeProfile] = None) -> List[int]:
    degrees = (profile or degree_profile(graph)).degrees
    return [degrees[u] ** 2 + degrees[v] ** 2 for u, v in graph.edges]


def edges_balanced(graph: Graph, profile: Optional[DegreeProfile] = None) -> bool:
    """d(u) = d(v) on every edge, i.e. every component with edges is regular."""
    degrees = (profile or degree_profile(graph)).degrees
    return all(degrees[u] == degrees[v] for u, v in graph.edges)


def classify(graph: Graph) -> GraphClassification:
    if graph.n == 0:
        return GraphClassification(
            kind=GraphKind.EMPTY, connected=True, bipartite=True, edge_sumsq_constant=False
        )

    profile = degree_profile(graph)
    sumsq = set(edge_sumsq_values(graph, profile))
    # m = 0 never counts as constant
    edge_sumsq_constant = len(sumsq) == 1
    connected = is_connected(graph)
    sides = bipartition(graph)
    bipartite = sides is not None
    distinct = profile.distinct_degrees

    kind = GraphKind.GENERAL
    parameters: Tuple[int, ...] = ()
    if len(distinct) == 1:
        kind, parameters = GraphKind.REGULAR, (distinct[0],)
    elif len(distinct) == 2:
        kind = GraphKind.BIDEGREED
        if connected and bipartite:
            side_degrees = [{profile.degrees[v] for v in side} for side in sides]
            if all(len(s) == 1 for s in side_degrees):
                kind, parameters = GraphKind.BIREGULAR, (distinct[1], distinct[0])

    return GraphClassification(
        kind=kind,
        parameters=parameters,
        connected=connected,
        bipartite=bipartite,
        edge_sumsq_constant=edge_sumsq_constant,
    )


def check_remark1_equivalence(graph: Graph) -> bool:
    """Whether the three bi-regularity characterisations agree.

    For a connected non-regular graph: (1) bi-regular, (2) bi-degreed with
    |d(u) - d(v)| > 0 constant over edges, (3) d(u)^2 + d(v)^2 constant over
    edges.
    """
    profile = degree_profile(graph)
    if graph.n == 0 or not is_connected(graph):
        raise GraphError("bi-regularity characterisations need a connected graph")
    if profile.is_regular:
        raise GraphError("bi-regularity characterisations need a non-regular graph")

    degrees = profile.degrees
    differences = {abs(degrees[u] - degrees[v]) for u, v in graph.edges}
    first = classify(graph).kind is GraphKind.BIREGULAR
    second = len(profile.distinct_degrees) == 2 and len(differences) == 1 and 0 not in differences
    third = len(set(edge_sumsq_values(graph, profile))) == 1
    return first == second == third
