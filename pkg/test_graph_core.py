"""
Tests for graph construction, degree queries and classification.
"""

import os
import sys
import unittest

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import graph_core
from graph_core import (
    Graph,
    GraphError,
    GraphKind,
    add_edge,
    bipartition,
    check_remark1_equivalence,
    classify,
    complement,
    degree_profile,
    disjoint_union,
    is_connected,
    make_graph,
)
from graph_io import EnumerationSpec, enumerate_graphs, enumerate_range, generate_family, random_graph


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


random_graphs = st.builds(
    random_graph,
    n=st.integers(min_value=1, max_value=9),
    p=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=2 ** 64 - 1),
)


class TestGraphConstruction(unittest.TestCase):
    """Test cases for make_graph and the Graph model."""

    def test_duplicates_collapse(self):
        graph = make_graph(3, [(0, 1), (1, 0), (1, 2)])
        self.assertEqual(graph.m, 2)
        self.assertEqual(graph.sorted_edges(), [(0, 1), (1, 2)])

    def test_self_loop_rejected(self):
        with self.assertRaises(GraphError) as ctx:
            make_graph(2, [(1, 1)])
        self.assertIn("self-loop", str(ctx.exception))

    def test_out_of_range_rejected(self):
        with self.assertRaises(GraphError):
            make_graph(3, [(0, 3)])
        with self.assertRaises(GraphError):
            make_graph(3, [(-1, 2)])

    def test_needs_a_vertex(self):
        with self.assertRaises(GraphError):
            make_graph(0, [])

    def test_graph_is_immutable(self):
        graph = make_graph(2, [(0, 1)])
        with self.assertRaises(Exception):
            graph.n = 5

    def test_add_edge_is_pure(self):
        graph = make_graph(3, [(0, 1)])
        bigger = add_edge(graph, 2, 1)
        self.assertEqual(graph.m, 1)
        self.assertEqual(bigger.sorted_edges(), [(0, 1), (1, 2)])


class TestDegreesAndOperations(unittest.TestCase):
    """Test cases for degree profiles, complement and disjoint union."""

    def setUp(self):
        self.path = generate_family("path", [4])
        self.isolated = make_graph(4, [(0, 1), (1, 2)])

    def test_degree_profile(self):
        profile = degree_profile(self.path)
        self.assertEqual(profile.degrees, (1, 2, 2, 1))
        self.assertEqual((profile.min_degree, profile.max_degree), (1, 2))
        self.assertFalse(profile.is_regular)

    def test_positive_degree_extremes_skip_isolated(self):
        profile = degree_profile(self.isolated)
        self.assertEqual(profile.min_degree, 0)
        self.assertEqual(profile.min_positive_degree, 1)
        self.assertEqual(profile.max_positive_degree, 2)
        self.assertEqual(degree_profile(make_graph(3, [])).min_positive_degree, 0)

    def test_degree_uniform_on_edges(self):
        triangle_plus_vertex = make_graph(4, [(0, 1), (1, 2), (0, 2)])
        self.assertTrue(degree_profile(triangle_plus_vertex).is_degree_uniform_on_edges)
        self.assertFalse(degree_profile(triangle_plus_vertex).is_regular)

    def test_complement_of_path(self):
        # P4 is self-complementary
        self.assertEqual(complement(self.path).m, 3)
        self.assertEqual(
            sorted(degree_profile(complement(self.path)).degrees),
            sorted(degree_profile(self.path).degrees),
        )

    @given(graph=random_graphs)
    @settings(max_examples=100, deadline=None)
    def test_complement_involution(self, graph):
        self.assertEqual(complement(complement(graph)).edges, graph.edges)
        self.assertEqual(graph.m + complement(graph).m, graph.n * (graph.n - 1) // 2)

    @given(first=random_graphs, second=random_graphs)
    @settings(max_examples=50, deadline=None)
    def test_disjoint_union_relabels_second(self, first, second):
        union = disjoint_union(first, second)
        self.assertEqual(union.n, first.n + second.n)
        self.assertEqual(union.m, first.m + second.m)
        self.assertEqual(
            degree_profile(union).degrees,
            degree_profile(first).degrees + degree_profile(second).degrees,
        )


class TestNetworkxView(unittest.TestCase):
    """Test cases for the conversions to and from networkx."""

    def test_view_is_frozen_and_ordered(self):
        graph = generate_family("path", [4])
        view = graph_core.to_networkx(graph)
        self.assertTrue(nx.is_frozen(view))
        self.assertEqual(list(view.nodes()), [0, 1, 2, 3])
        self.assertIs(graph_core.to_networkx(make_graph(4, [(2, 3), (0, 1), (1, 2)])), view)

    def test_round_trip(self):
        graph = make_graph(5, [(0, 4), (1, 3)])
        self.assertEqual(graph_core.from_networkx(graph_core.to_networkx(graph)), graph)

    def test_labels_are_renumbered(self):
        view = nx.Graph([("a", "b"), ("b", "c")])
        self.assertEqual(graph_core.from_networkx(view).sorted_edges(), [(0, 1), (1, 2)])

    def test_directed_input_rejected(self):
        with self.assertRaises(GraphError):
            graph_core.from_networkx(nx.DiGraph([(0, 1)]))


class TestClassification(unittest.TestCase):
    """Test cases for classify and the bi-regularity characterisations."""

    def test_regular(self):
        result = classify(generate_family("cycle", [5]))
        self.assertEqual(result.kind, GraphKind.REGULAR)
        self.assertEqual(result.parameters, (2,))
        self.assertTrue(result.edge_sumsq_constant)
        self.assertEqual(result.label(), "regular(2)")

    def test_complete_is_regular(self):
        result = classify(generate_family("complete", [6]))
        self.assertEqual((result.kind, result.parameters), (GraphKind.REGULAR, (5,)))

    def test_biregular(self):
        result = classify(generate_family("complete_bipartite", [2, 3]))
        self.assertEqual(result.kind, GraphKind.BIREGULAR)
        self.assertEqual(result.parameters, (3, 2))
        self.assertTrue(result.bipartite)
        self.assertTrue(result.edge_sumsq_constant)

    def test_star_is_biregular(self):
        result = classify(generate_family("star", [3]))
        self.assertEqual((result.kind, result.parameters), (GraphKind.BIREGULAR, (3, 1)))

    def test_path_is_bidegreed(self):
        result = classify(generate_family("path", [4]))
        self.assertEqual(result.kind, GraphKind.BIDEGREED)
        self.assertEqual(result.parameters, ())
        self.assertFalse(result.edge_sumsq_constant)

    def test_disconnected_two_degrees_is_bidegreed(self):
        result = classify(make_graph(3, [(0, 1)]))
        self.assertEqual(result.kind, GraphKind.BIDEGREED)
        self.assertFalse(result.connected)

    def test_edgeless(self):
        result = classify(make_graph(4, []))
        self.assertEqual((result.kind, result.parameters), (GraphKind.REGULAR, (0,)))
        self.assertFalse(result.edge_sumsq_constant)

    def test_empty_kind_only_without_vertices(self):
        self.assertEqual(classify(Graph(n=0)).kind, GraphKind.EMPTY)

    def test_general(self):
        # degrees 1, 2, 3
        graph = make_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        self.assertEqual(classify(graph).kind, GraphKind.GENERAL)

    def test_connectivity_and_bipartiteness_match_networkx(self):
        for graph in enumerate_range(1, 5):
            reference = to_networkx(graph)
            self.assertEqual(is_connected(graph), nx.is_connected(reference))
            self.assertEqual(bipartition(graph) is not None, nx.is_bipartite(reference))

    def test_bipartition_sides(self):
        first, second = bipartition(generate_family("complete_bipartite", [2, 3]))
        self.assertEqual(first, frozenset({0, 1}))
        self.assertEqual(second, frozenset({2, 3, 4}))
        self.assertIsNone(bipartition(generate_family("cycle", [5])))

    def test_bipartition_puts_isolated_vertex_first(self):
        first, second = bipartition(make_graph(4, [(1, 2), (2, 3)]))
        self.assertEqual(first, frozenset({0, 1, 3}))
        self.assertEqual(second, frozenset({2}))

    def test_biregular_characterisations_agree(self):
        checked = 0
        for n in range(2, 7):
            for graph in enumerate_graphs(EnumerationSpec(n=n, connected_only=True)):
                if degree_profile(graph).is_regular:
                    continue
                self.assertTrue(check_remark1_equivalence(graph), msg=graph.sorted_edges())
                checked += 1
        self.assertGreater(checked, 20000)

    def test_biregular_characterisations_preconditions(self):
        with self.assertRaises(GraphError):
            check_remark1_equivalence(generate_family("cycle", [4]))
        with self.assertRaises(GraphError):
            check_remark1_equivalence(make_graph(3, [(0, 1)]))


if __name__ == "__main__":
    unittest.main(verbosity=2)
