"""
Tests for the Sombor bound checkers and the corpus sweep.
"""

import itertools
import math
import os
import sys
import unittest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import indices
from bounds import (
    ALL_BOUND_IDS,
    BoundNotApplicable,
    check_aux_forgotten,
    check_aux_zagreb,
    check_nordhaus_gaddum,
    check_sombor_chi,
    check_sombor_forgotten,
    check_sombor_nm,
    check_sombor_randic,
    check_theorem2,
    sombor_first_zagreb_bounds,
    sombor_second_zagreb_bounds,
    verify_corpus,
)
from graph_core import complement, disjoint_union, make_graph
from graph_io import EnumerationSpec, enumerate_graphs, enumerate_range, generate_family, random_graph, serialize_graph6
from state import BoundForm, DEFAULT_ALPHAS, Direction


def family(name, *params):
    return generate_family(name, list(params))


def exhaustive_corpus():
    """All labeled graphs up to 5 vertices plus one graph per class on 6."""
    return itertools.chain(
        enumerate_range(1, 5),
        enumerate_graphs(EnumerationSpec(n=6, dedup_isomorphism=True)),
    )


class TestAuxiliaryBounds(unittest.TestCase):
    """Test cases for the chained inequalities on F and M1."""

    def test_forgotten_equality_on_complete(self):
        check = check_aux_forgotten(family("complete", 4))
        self.assertEqual((check.lhs, check.rhs), (108.0, 108.0))
        self.assertTrue(check.holds and check.equality_observed and check.equality_predicted)

    def test_forgotten_strict(self):
        path = check_aux_forgotten(family("path", 4))
        self.assertAlmostEqual(path.rhs, 100 / 6, places=12)
        self.assertFalse(path.equality_observed)
        star = check_aux_forgotten(family("star", 3))
        self.assertEqual((star.lhs, star.rhs), (30.0, 24.0))
        self.assertFalse(star.equality_predicted)

    def test_forgotten_uniform_with_isolated_vertex(self):
        check = check_aux_forgotten(make_graph(4, [(0, 1), (1, 2), (0, 2)]))
        self.assertTrue(check.equality_observed and check.equality_predicted)

    def test_forgotten_needs_edges(self):
        with self.assertRaises(BoundNotApplicable):
            check_aux_forgotten(make_graph(3, []))

    def test_zagreb(self):
        cycle = check_aux_zagreb(family("cycle", 5))
        self.assertEqual((cycle.lhs, cycle.rhs), (20.0, 20.0))
        self.assertTrue(cycle.equality_predicted and cycle.equality_observed)
        path = check_aux_zagreb(family("path", 3))
        self.assertAlmostEqual(path.rhs, 16 / 3, places=12)
        self.assertTrue(path.holds)
        self.assertFalse(path.equality_observed)
        edgeless = check_aux_zagreb(make_graph(4, []))
        self.assertTrue(edgeless.equality_observed and edgeless.equality_predicted)


class TestSomborForgotten(unittest.TestCase):
    """Test cases for SO_alpha against m and F."""

    def test_star_is_tight(self):
        check = check_sombor_forgotten(family("star", 3), 3)
        self.assertAlmostEqual(check.lhs, 94.868329805, places=8)
        self.assertTrue(check.equality_observed and check.equality_predicted)
        self.assertEqual(check.direction, Direction.GE)

    def test_path_is_strict(self):
        check = check_sombor_forgotten(family("path", 4), 3)
        self.assertAlmostEqual(check.lhs, 44.9881, places=3)
        self.assertAlmostEqual(check.rhs, 44.0908, places=3)
        self.assertTrue(check.holds)
        self.assertFalse(check.equality_observed)

    def test_regular_graph_is_tight_in_concave_regime(self):
        check = check_sombor_forgotten(family("cycle", 5), 0.5)
        self.assertEqual(check.direction, Direction.LE)
        self.assertTrue(check.equality_observed and check.equality_predicted)

    def test_square_exponent_is_an_identity(self):
        for graph in enumerate_range(2, 4):
            if graph.m == 0:
                continue
            check = check_sombor_forgotten(graph, 2)
            self.assertEqual(check.slack, 0.0)
            self.assertEqual(check.form, BoundForm.IDENTITY)

    def test_printed_direction_fails_between_one_and_two(self):
        printed = check_sombor_forgotten(family("path", 4), 1.5, printed=True)
        self.assertEqual(printed.direction, Direction.GE)
        self.assertFalse(printed.holds)
        self.assertAlmostEqual(printed.lhs, 11.4442, places=3)
        self.assertAlmostEqual(printed.rhs, 11.5015, places=3)
        corrected = check_sombor_forgotten(family("path", 4), 1.5)
        self.assertTrue(corrected.holds)
        self.assertEqual(corrected.form, BoundForm.CORRECTED)

    def test_printed_has_no_claim_at_one(self):
        with self.assertRaises(BoundNotApplicable):
            check_sombor_forgotten(family("path", 4), 1, printed=True)
        self.assertEqual(check_sombor_forgotten(family("path", 4), 1).form, BoundForm.EXTENDED)


class TestSomborOrderSize(unittest.TestCase):
    """Test cases for SO_alpha against n and m."""

    def test_regular_equality(self):
        check = check_sombor_nm(family("cycle", 5), 2)
        self.assertEqual(check.lhs, 40.0)
        self.assertAlmostEqual(check.rhs, 40.0, places=12)
        self.assertTrue(check.equality_observed and check.equality_predicted)
        half = check_sombor_nm(family("cycle", 7), 0.5)
        self.assertTrue(half.equality_observed)

    def test_star_strict(self):
        check = check_sombor_nm(family("star", 3), 2)
        self.assertEqual((check.lhs, check.rhs), (30.0, 13.5))
        self.assertFalse(check.equality_predicted)

    def test_negative_alpha_has_no_valid_direction(self):
        with self.assertRaises(BoundNotApplicable):
            check_sombor_nm(family("star", 3), -1)

    def test_printed_forms_fail(self):
        self.assertFalse(check_sombor_nm(family("star", 3), 0.5, printed=True).holds)
        self.assertFalse(check_sombor_nm(family("star", 3), -1, printed=True).holds)
        self.assertTrue(check_sombor_nm(family("star", 3), 0.5).holds)

    def test_disjoint_union_breaks_upper_reading(self):
        # K_2 + K_3 sits above the lower form at alpha = -2, so <= fails
        graph = disjoint_union(family("complete", 2), family("complete", 3))
        check = check_sombor_nm(graph, -2, printed=True)
        self.assertAlmostEqual(check.lhs, 0.875, places=12)
        self.assertAlmostEqual(check.rhs, 0.78125, places=12)
        self.assertEqual(check.direction, Direction.GE)


class TestExtremalBound(unittest.TestCase):
    """Test cases for the three exponent regimes of the extremal bound."""

    def test_single_edge_lower_regime(self):
        check = check_theorem2(make_graph(4, [(0, 1)]), 0.5)
        self.assertEqual(check.bound_id, "B3.1")
        self.assertTrue(check.equality_observed and check.equality_predicted)

    def test_k2_negative_regime(self):
        check = check_theorem2(family("complete", 2), -1)
        self.assertEqual(check.bound_id, "B3.2")
        self.assertAlmostEqual(check.lhs, 2 ** -0.5, places=12)
        self.assertTrue(check.equality_observed and check.equality_predicted)

    def test_complete_upper_regime(self):
        check = check_theorem2(family("complete", 4), 2)
        self.assertEqual(check.bound_id, "B3.3")
        self.assertEqual((check.lhs, check.rhs), (108.0, 108.0))
        self.assertTrue(check.equality_predicted)

    def test_no_claim_at_zero_or_one(self):
        for alpha in (0, 1):
            with self.assertRaises(BoundNotApplicable):
                check_theorem2(family("path", 4), alpha)
        with self.assertRaises(BoundNotApplicable):
            check_theorem2(make_graph(1, []), 2)


class TestNordhausGaddum(unittest.TestCase):
    """Test cases for SO_alpha(G) + SO_alpha(complement)."""

    def test_complete_upper_equality(self):
        checks = {c.bound_id: c for c in check_nordhaus_gaddum(family("complete", 5), 1)}
        self.assertEqual(set(checks), {"B4.1a", "B4.1b"})
        self.assertAlmostEqual(checks["B4.1a"].lhs, 80 / math.sqrt(2), places=10)
        self.assertTrue(checks["B4.1a"].equality_observed)

    def test_self_complementary_cycle(self):
        cycle = family("cycle", 5)
        checks = {c.bound_id: c for c in check_nordhaus_gaddum(cycle, 2)}
        self.assertEqual(checks["B4.1b"].lhs, 80.0)
        self.assertEqual(checks["B4.1b"].slack, 40.0)
        for graph in (cycle, family("path", 4)):
            total = check_nordhaus_gaddum(graph, 1.5)[0].lhs
            self.assertAlmostEqual(total, 2 * indices.general_sombor(graph, 1.5), places=10)
            self.assertEqual(complement(graph).m, graph.m)

    def test_negative_regime(self):
        checks = {c.bound_id: c for c in check_nordhaus_gaddum(family("complete", 3), -1)}
        self.assertEqual(set(checks), {"B4.2a", "B4.2b"})
        self.assertTrue(checks["B4.2a"].equality_observed)
        self.assertAlmostEqual(checks["B4.2b"].rhs, 6 / math.sqrt(2), places=12)
        self.assertTrue(checks["B4.2b"].holds)
        self.assertEqual(checks["B4.2b"].direction, Direction.LT)

    def test_small_exponent_lower_bound(self):
        ids = [c.bound_id for c in check_nordhaus_gaddum(family("path", 4), 0.5)]
        self.assertEqual(ids, ["B4.1a", "B4.1c"])
        with self.assertRaises(BoundNotApplicable):
            check_nordhaus_gaddum(family("path", 4), 0)


class TestRandicAndChi(unittest.TestCase):
    """Test cases for SO_alpha against R_alpha and chi_alpha."""

    def test_randic_regular_equality(self):
        lower, upper = check_sombor_randic(family("cycle", 6), 1)
        self.assertAlmostEqual(lower.rhs, 12 * math.sqrt(2), places=12)
        self.assertTrue(lower.equality_observed and upper.equality_observed)

    def test_randic_strict_path(self):
        lower, upper = check_sombor_randic(family("path", 3), 1)
        self.assertAlmostEqual(lower.rhs, 2 * math.sqrt(2), places=12)
        self.assertAlmostEqual(upper.rhs, 4 * math.sqrt(2), places=12)
        self.assertTrue(lower.holds and upper.holds)
        self.assertFalse(lower.equality_observed or upper.equality_observed)

    def test_randic_negative_alpha(self):
        printed_lower, _ = check_sombor_randic(family("path", 3), -1, printed=True)
        self.assertAlmostEqual(printed_lower.rhs, math.sqrt(2), places=12)
        self.assertFalse(printed_lower.holds)
        lower, upper = check_sombor_randic(family("path", 3), -1)
        self.assertEqual(lower.form, BoundForm.SWAPPED)
        self.assertAlmostEqual(lower.rhs, 2 ** -0.5, places=12)
        self.assertAlmostEqual(lower.lhs, 2 / math.sqrt(5), places=12)
        self.assertTrue(lower.holds and upper.holds)

    def test_chi_cycle_equality(self):
        left, right = check_sombor_chi(family("cycle", 5), 1)
        self.assertAlmostEqual(left.rhs, 20 / math.sqrt(2), places=12)
        self.assertAlmostEqual(right.rhs, math.sqrt(200), places=12)
        self.assertTrue(left.equality_observed and right.equality_observed)

    def test_chi_path(self):
        left, right = check_sombor_chi(family("path", 4), 1)
        self.assertAlmostEqual(left.lhs, 2 * math.sqrt(5) + math.sqrt(8), places=12)
        self.assertAlmostEqual(right.rhs, math.sqrt(60), places=12)
        self.assertTrue(left.holds and right.holds)

    def test_chi_negative_alpha(self):
        printed_left, _ = check_sombor_chi(family("path", 3), -1, printed=True)
        self.assertAlmostEqual(printed_left.rhs, 2 / 3 * math.sqrt(2), places=12)
        self.assertFalse(printed_left.holds)
        left, right = check_sombor_chi(family("path", 3), -1)
        self.assertEqual(left.direction, Direction.LE)
        self.assertTrue(left.holds and right.holds)

    def test_degenerate_exponent(self):
        for check in check_sombor_randic(family("path", 5), 0) + check_sombor_chi(family("path", 5), 0):
            self.assertEqual(check.form, BoundForm.IDENTITY)
            self.assertTrue(check.equality_observed)

    def test_needs_edges(self):
        with self.assertRaises(BoundNotApplicable):
            check_sombor_randic(make_graph(2, []), 1)
        with self.assertRaises(BoundNotApplicable):
            check_sombor_chi(make_graph(2, []), 1)

    def test_corollaries_match_general_checks(self):
        for graph in enumerate_range(2, 5):
            if graph.m == 0:
                continue
            lower, upper = check_sombor_randic(graph, 1)
            expected = sombor_second_zagreb_bounds(graph)
            left, right = check_sombor_chi(graph, 1)
            expected_chi = sombor_first_zagreb_bounds(graph)
            for got, want in zip((lower.rhs, upper.rhs, left.rhs, right.rhs), expected + expected_chi):
                self.assertLessEqual(abs(got - want), 1e-12 * max(1.0, abs(want)))

    def test_corollaries_on_random_graphs(self):
        checked = 0
        for seed in range(100):
            graph = random_graph(6 + seed % 15, 0.35, seed)
            if graph.m == 0:
                continue
            so = indices.sombor(graph)
            lower, upper = sombor_second_zagreb_bounds(graph)
            left, right = sombor_first_zagreb_bounds(graph)
            tol = 1e-9 * max(1.0, so)
            self.assertLessEqual(lower, so + tol)
            self.assertLessEqual(so, upper + tol)
            self.assertLessEqual(left, so + tol)
            self.assertLessEqual(so, right + tol)
            randic_checks = check_sombor_randic(graph, 1)
            chi_checks = check_sombor_chi(graph, 1)
            self.assertTrue(all(check.holds for check in randic_checks + chi_checks))
            for got, want in zip([c.rhs for c in randic_checks + chi_checks], (lower, upper, left, right)):
                self.assertLessEqual(abs(got - want), 1e-12 * max(1.0, abs(want)))
            checked += 1
        self.assertGreater(checked, 90)

    def test_corollaries_need_edges(self):
        with self.assertRaises(BoundNotApplicable):
            sombor_second_zagreb_bounds(make_graph(3, []))
        with self.assertRaises(BoundNotApplicable):
            sombor_first_zagreb_bounds(make_graph(3, []))


class TestVerifyCorpus(unittest.TestCase):
    """Test cases for the aggregated sweep."""

    def test_exhaustive_sweep_is_clean(self):
        reports = verify_corpus(exhaustive_corpus(), alphas=DEFAULT_ALPHAS)
        self.assertEqual({r.bound_id for r in reports}, set(ALL_BOUND_IDS))
        for report in reports:
            self.assertEqual(report.violations, [], msg=f"{report.bound_id} alpha={report.alpha}")
            self.assertEqual(report.equality_mismatches, [], msg=f"{report.bound_id} alpha={report.alpha}")
            self.assertGreater(report.graphs_checked, 0)

    def test_witnesses_of_extremal_upper_regime(self):
        reports = verify_corpus(enumerate_range(2, 4), bound_ids=["B3.3"], alphas=[3.0])
        self.assertEqual(len(reports), 1)
        expected = {
            serialize_graph6(family(name, n)) for n in (2, 3, 4) for name in ("complete", "empty")
        }
        self.assertEqual(sorted(reports[0].equality_witnesses), sorted(expected))

    def test_printed_forms_are_violated(self):
        reports = verify_corpus(enumerate_range(3, 4), bound_ids=["B5", "B6"], alphas=[-1.0], printed=True)
        self.assertTrue(any(r.violations for r in reports))

    def test_report_order_and_alpha_free_bounds(self):
        reports = verify_corpus([family("path", 4)], alphas=[3.0, -1.0])
        keys = [(r.bound_id, r.alpha) for r in reports]
        self.assertEqual(keys[:2], [("B0a", None), ("B0b", None)])
        self.assertEqual(keys[2:4], [("B1", -1.0), ("B1", 3.0)])
        self.assertEqual(keys, sorted(keys, key=lambda k: (ALL_BOUND_IDS.index(k[0]), k[1] or -math.inf)))

    def test_prefix_filter(self):
        reports = verify_corpus([family("complete", 3)], bound_ids=["b4.2"], alphas=[-1.0, 1.0])
        self.assertEqual([r.bound_id for r in reports], ["B4.2a", "B4.2b"])
        with self.assertRaises(ValueError):
            verify_corpus([family("complete", 3)], bound_ids=["B9"])

    def test_empty_corpus(self):
        self.assertEqual(verify_corpus([]), [])

    def test_collected_checks_follow_corpus_order(self):
        collected = []
        corpus = [family("path", 3), family("cycle", 4)]
        verify_corpus(corpus, bound_ids=["B1"], alphas=[3.0], collected=collected)
        self.assertEqual([c.n for c in collected], [3, 4])

    def test_parallel_matches_serial(self):
        corpus = list(enumerate_range(2, 4))

        def summary(reports):
            return [
                (r.bound_id, r.alpha, r.graphs_checked, [v.graph6 for v in r.violations],
                 r.equality_witnesses, r.equality_mismatches)
                for r in reports
            ]

        serial = verify_corpus(corpus, alphas=[-1.0, 0.5, 2.0], chunk_size=7)
        parallel = verify_corpus(corpus, alphas=[-1.0, 0.5, 2.0], workers=2, chunk_size=7)
        self.assertEqual(summary(serial), summary(parallel))


if __name__ == "__main__":
    unittest.main(verbosity=2)
