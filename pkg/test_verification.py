"""Quasi DB - Verification Unit Tests"""

from fractions import Fraction
from itertools import combinations
import math
import os
import unittest
from unittest import mock

from hypothesis import given, settings
import hypothesis.strategies as st
import networkx as nx

from quasi_db.balance import Classification, classify, d_set
from quasi_db.constants import FINDING_CONFIRMED, FINDING_COUNTEREXAMPLE, FINDING_MISMATCH
from quasi_db.constructions import (
    HGraphSpec,
    complete_bipartite,
    complete_graph,
    complete_with_pendants,
    cycle,
    h_graph,
    incidence_k4,
    path,
    star,
    tensor
)
from quasi_db.enumeration import EnumerationScope
from quasi_db.error import DisconnectedGraphError, EnvelopeError, GraphFormatError, InvalidParamsError
from quasi_db.formats import parse_graph6
from quasi_db.graph import Graph, all_pairs_distances, odd_cycle
from quasi_db.verification import (
    Finding,
    check_bipartite_theorem,
    check_corona,
    check_edge_removal,
    check_families,
    check_h_graph,
    check_tensor,
    check_tensor_pair,
    core_corpus,
    parity_distances,
    parse_finding,
    pendant_form,
    reclassify_independently,
    run_check,
    run_search,
    search_conjecture,
    tensor_distance
)


# Strategies
# ==========
@st.composite
def connected_graphs(draw, min_order=2, max_order=7):
    """Draw a random spanning tree plus random extra edges."""
    order = draw(st.integers(min_order, max_order))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, order)]
    pairs = list(combinations(range(order), 2))
    edges.extend(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return Graph(order, edges)


@st.composite
def non_bipartite_graphs(draw, max_order=7):
    """Draw a connected graph that contains the triangle 0-1-2."""
    g = draw(connected_graphs(min_order=3, max_order=max_order))
    return Graph(g.order, list(g.edges) + [(0, 1), (1, 2), (0, 2)])


# Classes
# =======
class TestFinding(unittest.TestCase):
    """Finding Tests"""
    def test_1_lines(self):
        """Test serializing and parsing findings."""
        finding = Finding("parity", "Bw", FINDING_CONFIRMED, "lambda=3/2 ok")
        self.assertEqual(finding.to_line(), "parity\tBw\tconfirmed\tlambda=3/2 ok")
        self.assertEqual(parse_finding(finding.to_line() + "\n", 3), finding)
        self.assertEqual(finding.graph(), complete_graph(3))
        self.assertFalse(finding.is_counterexample)
        self.assertTrue(Finding("parity", "Bw", FINDING_COUNTEREXAMPLE).is_counterexample)
        self.assertEqual(Finding("parity", "Bw", FINDING_MISMATCH).name, "mismatch")

    def test_2_invalid(self):
        """Test invalid findings."""
        with self.assertRaises(InvalidParamsError):
            Finding("parity", "Bw", 3)

        with self.assertRaises(InvalidParamsError):
            Finding("parity", "Bw", FINDING_CONFIRMED, "a\tb")

        with self.assertRaises(GraphFormatError) as cm:
            parse_finding("parity\tBw\tconfirmed", 4)

        self.assertEqual(cm.exception.line, 4)

        with self.assertRaises(GraphFormatError):
            parse_finding("parity\tBw\tmaybe\t")


class TestIndependentChecks(unittest.TestCase):
    """Independent Recomputation Tests"""
    @settings(max_examples=200, deadline=None)
    @given(connected_graphs(), st.integers(1, 4))
    def test_1_reclassify(self, g, n):
        """Test that Floyd-Warshall reclassification agrees with the classifier."""
        self.assertEqual(reclassify_independently(g, n), classify(g, n).verdict)

    def test_2_reclassify_disconnected(self):
        """Test that reclassification rejects disconnected graphs."""
        with self.assertRaises(DisconnectedGraphError):
            reclassify_independently(Graph(3, [(0, 1)]), 1)

    def test_3_parity_distances(self):
        """Test even and odd walk lengths."""
        pd = parity_distances(cycle(4))
        self.assertEqual(pd.even(0, 0), 0)
        self.assertEqual(pd.even(0, 2), 2)
        self.assertEqual(pd.odd(0, 1), 1)
        self.assertEqual(pd.odd(0, 0), math.inf)

        pd = parity_distances(cycle(5))
        self.assertEqual(pd.odd(0, 0), 5)
        self.assertEqual(pd.even(0, 1), 4)

    @settings(max_examples=200, deadline=None)
    @given(non_bipartite_graphs(), non_bipartite_graphs())
    def test_4_tensor_distance(self, g, h):
        """Test the tensor distance law against a direct BFS on non-bipartite factors."""
        product = nx.tensor_product(g.to_networkx(), h.to_networkx())
        pg, ph = parity_distances(g), parity_distances(h)

        for a in product.nodes():
            lengths = nx.single_source_shortest_path_length(product, a)

            for b in product.nodes():
                self.assertEqual(tensor_distance(pg, ph, a, b), lengths.get(b, math.inf))

    def test_5_pendant_form(self):
        """Test recognizing complete graphs with pendants."""
        self.assertEqual(pendant_form(complete_with_pendants(4, [3, 1])), (4, (1, 3)))
        self.assertEqual(pendant_form(path(4)), (2, (1, 2)))
        self.assertIsNone(pendant_form(star(3)))
        self.assertIsNone(pendant_form(cycle(4)))


class TestTheoremChecks(unittest.TestCase):
    """Theorem Check Tests"""
    def assertNoCounterexamples(self, findings):
        self.assertEqual([f for f in findings if f.is_counterexample], [])

    def test_1_sweeps(self):
        """Test the exhaustive sweeps over small graphs."""
        for name, max_order in (
            ("bipartite-theorem", 8),
            ("transmission-regular", 7),
            ("parity", 7),
            ("edge-addition", 6)
        ):
            findings = run_check(name, max_order)
            self.assertNoCounterexamples(findings)
            self.assertTrue(all(f.check == name for f in findings))

        findings = run_check("transmission-regular", 4)
        self.assertEqual(
            [f.graph6 for f in findings],
            sorted(f.graph6 for f in findings)
        )

    def test_2_pendant_proposition(self):
        """Test the pendant proposition in both directions."""
        findings = run_check("pendant-proposition", 7)
        self.assertNoCounterexamples(findings)
        checks = {f.check for f in findings}
        self.assertEqual(checks, {"pendant-construction", "pendant-proposition"})

    def test_3_edge_removal(self):
        """Test the edge-removal check on single graphs."""
        for g in (complete_bipartite(2, 3), complete_bipartite(3, 4)):
            finding = check_edge_removal(g)
            self.assertEqual(finding.verdict, FINDING_CONFIRMED)

        self.assertTrue(check_edge_removal(complete_bipartite(2, 3)).detail.startswith("lambda=3/2 "))

        for g in (path(3), cycle(4)):
            with self.assertRaises(InvalidParamsError):
                check_edge_removal(g)

    def test_4_corona(self):
        """Test the corona check."""
        findings = check_corona(4)
        self.assertNoCounterexamples(findings)
        self.assertTrue(findings)

        for max_order in (0, 6):
            with self.assertRaises(EnvelopeError):
                check_corona(max_order)

        with mock.patch.dict(os.environ, {"QDB_MAX_ORDER": "3"}):
            self.assertTrue(check_corona(3))

            with self.assertRaises(EnvelopeError):
                check_corona(4)

    def test_5_tensor(self):
        """Test the tensor check."""
        findings = check_tensor(4)
        self.assertNoCounterexamples(findings)
        self.assertIn("quasi factors", " ".join(f.detail for f in findings))

        for max_order in (1, 7):
            with self.assertRaises(EnvelopeError):
                check_tensor(max_order)

    def test_6_h_graph(self):
        """Test the H-graph check."""
        findings = check_h_graph()
        self.assertNoCounterexamples(findings)
        details = {f.detail.split(" t1=")[0]: f for f in findings}

        mismatch = details["core=C6 m=1 k=2"]
        self.assertEqual(mismatch.verdict, FINDING_MISMATCH)
        self.assertIn("QuasiBalanced(1, 5/4)", mismatch.detail)

        confirmed = details["core=k4-incidence m=3 k=2"]
        self.assertEqual(confirmed.verdict, FINDING_CONFIRMED)
        self.assertIn("stated=QuasiBalanced(1, 8/7)", confirmed.detail)
        self.assertIn(("k4-incidence", incidence_k4()), core_corpus())

    def test_7_families(self):
        """Test the construction family check."""
        findings = check_families()
        self.assertNoCounterexamples(findings)
        verdicts = {f.detail.split(" ")[0]: f.verdict for f in findings}
        self.assertEqual(verdicts["g5"], FINDING_CONFIRMED)
        self.assertEqual(verdicts["g4"], FINDING_CONFIRMED)
        self.assertEqual(verdicts["g3(3,2,2)"], FINDING_CONFIRMED)
        self.assertEqual(verdicts["g3(3,2,3)"], FINDING_MISMATCH)
        self.assertEqual(verdicts["fig10(6,5)"], FINDING_CONFIRMED)
        self.assertEqual(verdicts["fig11(4,6,5)"], FINDING_CONFIRMED)
        self.assertEqual(verdicts["odd_family(2,4,6,5)"], FINDING_MISMATCH)
        self.assertEqual(verdicts["odd_family(3,4,6,5)"], FINDING_MISMATCH)

    def test_8_unknown(self):
        """Test unknown check and search names."""
        with self.assertRaises(InvalidParamsError):
            run_check("nope", 4)

        with self.assertRaises(InvalidParamsError):
            run_search("nope", 4)

    def test_9_edge_removal_counterexample(self):
        """Test that the only edge-removal counterexample up to order 8 is FqHco and that it re-verifies."""
        findings = run_check("edge-removal", 8)
        self.assertTrue(all(f.check == "edge-removal" for f in findings))
        self.assertEqual([f.graph6 for f in findings if f.is_counterexample], ["FqHco"])

        g = parse_graph6("FqHco")
        expected = Classification.quasi(1, Fraction(4, 3))
        self.assertIsNone(odd_cycle(g))
        self.assertEqual(g.min_degree, 2)
        self.assertEqual(reclassify_independently(g, 1), expected)

        finding = check_edge_removal(g)
        self.assertEqual(finding.verdict, FINDING_COUNTEREXAMPLE)
        self.assertEqual(finding.detail, "lambda=4/3 removing 0-1 or 0-2 keeps it")

        for e in ((0, 1), (0, 2)):
            self.assertEqual(reclassify_independently(g.remove_edge(*e), 1), expected)


class TestConsistency(unittest.TestCase):
    """Cross-Check Tests"""
    def test_1_tensor_pair(self):
        """Test the diameter-3 tensor statements on H(3, k4-incidence, 2) with itself."""
        g = h_graph(HGraphSpec(3, incidence_k4(), 2))
        findings = check_tensor_pair(g, g)
        self.assertEqual([f.check for f in findings], ["tensor", "tensor", "tensor-identity"])
        self.assertEqual(findings[0].verdict, FINDING_CONFIRMED)
        self.assertTrue(findings[0].detail.endswith(" quasi factors"))
        self.assertIn(" lambda=3/2 ", findings[1].detail)

        # Recount both statements straight from the networkx product
        product = nx.tensor_product(g.to_networkx(), g.to_networkx())
        t = tensor(g, g)
        self.assertEqual(findings[1].graph6, findings[2].graph6)
        self.assertEqual(parse_graph6(findings[1].graph6), t)

        quasi = any(
            reclassify_independently(Graph.from_networkx(product.subgraph(sorted(comp))), 1).is_quasi
            for comp in nx.connected_components(product)
        )
        self.assertEqual(findings[1].is_counterexample, quasi)

        lengths = dict(nx.all_pairs_shortest_path_length(product))
        d = all_pairs_distances(g)
        holds = True

        for x, y in g.edges:
            for a, b in g.edges:
                for first, second in (((x, a), (y, b)), ((x, b), (y, a))):
                    w = sum(
                        1 for z in product.nodes()
                        if lengths[first].get(z, math.inf) < lengths[second].get(z, math.inf)
                    )
                    stated = len(d_set(g, d, first[1], second[1], 2, 3)) + len(d_set(g, d, x, y, 2, 3))
                    holds = holds and w == stated

        self.assertEqual(findings[2].verdict, FINDING_CONFIRMED if holds else FINDING_MISMATCH)

    def test_2_tensor_pair_hypotheses(self):
        """Test that factor pairs outside the hypotheses only get the quasi-factor statement."""
        self.assertEqual(check_tensor_pair(cycle(6), cycle(6)), [])
        findings = check_tensor_pair(path(3), path(3))
        self.assertEqual([f.check for f in findings], ["tensor"])
        self.assertEqual(findings[0].verdict, FINDING_CONFIRMED)

    def test_3_unverified_verdicts(self):
        """Test that a verdict the Floyd-Warshall pass disagrees with is reported, not dropped."""
        with mock.patch("quasi_db.verification.odd_cycle", return_value=[0, 1, 2]), \
                mock.patch("quasi_db.verification.reclassify_independently",
                           return_value=Classification.unbalanced(1)):
            findings = check_bipartite_theorem(EnumerationScope(4))

        self.assertTrue(findings)

        for finding in findings:
            self.assertEqual(finding.verdict, FINDING_MISMATCH)
            self.assertIn("did not re-verify", finding.detail)

    def test_4_conjecture_strengthening(self):
        """Test that failing only (k1,k2)-regularity gets its own check name."""
        with mock.patch("quasi_db.verification.is_k1k2_regular", return_value=None):
            findings = search_conjecture(EnumerationScope(4))

        star_finding = [f for f in findings if sorted(f.graph().degrees()) == [1, 1, 1, 3]]
        self.assertEqual(len(star_finding), 1)
        self.assertEqual(star_finding[0].check, "conjecture-k1k2")
        self.assertTrue(star_finding[0].is_counterexample)
        self.assertEqual(star_finding[0].detail, "lambda=3 degrees=1,3 totals=3,5 k1k2=no")


class TestSearches(unittest.TestCase):
    """Search Tests"""
    def test_1_deterministic(self):
        """Test that the job count never changes the findings."""
        for name in ("conjecture", "biregular", "edge-transitive"):
            self.assertEqual(run_search(name, 8), run_search(name, 8, jobs=2))

        self.assertEqual(run_check("parity", 8), run_check("parity", 8, jobs=2))

    def test_2_named_graphs(self):
        """Test that the named graphs are always searched."""
        findings = run_search("biregular", 4)
        named = [f for f in findings if f.detail.startswith("k4-incidence ")]
        self.assertEqual(len(named), 1)
        self.assertEqual(named[0].verdict, FINDING_CONFIRMED)
        self.assertIn("(3,2)-biregular sides=4,6", named[0].detail)

        findings = run_search("edge-transitive", 4)
        named = [f for f in findings if f.detail.startswith("g4 ")]
        self.assertEqual([f.detail for f in named], ["g4 lambda=7/5 edge-transitive"])

    def test_3_conjecture(self):
        """Test the conjecture search records."""
        findings = run_search("conjecture", 4)
        star_finding = [f for f in findings if sorted(f.graph().degrees()) == [1, 1, 1, 3]]
        self.assertEqual(len(star_finding), 1)
        self.assertEqual(star_finding[0].detail, "lambda=3 degrees=1,3 totals=3,5 k1k2=yes")
        self.assertEqual(
            len(findings),
            sum(1 for g in EnumerationScope(4).graphs() if classify(g, 1).verdict.is_quasi)
        )
