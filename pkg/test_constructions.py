"""Quasi DB - Construction Unit Tests"""

from fractions import Fraction
from itertools import combinations
import unittest

from hypothesis import given, settings
import hypothesis.strategies as st

from quasi_db.balance import Classification, classify
from quasi_db.constructions import (
    GroupSpec,
    HGraphSpec,
    build_family,
    chain_join,
    clique_ring,
    complement,
    complete_bipartite,
    complete_graph,
    complete_with_pendants,
    corona,
    cycle,
    cyclic_chain,
    empty_graph,
    even_family,
    fig7,
    fig8,
    fig9,
    g1,
    g2,
    g3,
    g4,
    g5,
    h_graph,
    incidence_k4,
    join,
    odd_family,
    path,
    petersen,
    predict_even_family,
    predict_fig7,
    predict_fig8,
    predict_fig9,
    predict_g1,
    predict_g3,
    predict_odd_family,
    quasi_n_family,
    star,
    tensor
)
from quasi_db.error import InvalidParamsError
from quasi_db.graph import Graph, diameter


# Strategies
# ==========
@st.composite
def graphs(draw, min_order=1, max_order=8):
    """Draw any graph, connected or not."""
    order = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(order), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(order, edges)


# Functions
# =========
def predicted(prediction):
    """Return the classification a (w_x, w_y, n) prediction stands for."""
    wx, wy, n = prediction
    return Classification.quasi(n, Fraction(wx, wy))


# Classes
# =======
class TestBasicGraphs(unittest.TestCase):
    """Basic Graph Tests"""
    def test_1_builders(self):
        """Test the basic builders."""
        self.assertEqual(empty_graph(3), Graph(3))
        self.assertEqual(complete_graph(3).edge_count, 3)
        self.assertEqual(cycle(4).edges, ((0, 1), (0, 3), (1, 2), (2, 3)))
        self.assertEqual(path(1), Graph(1))
        self.assertEqual(star(3).degrees(), (3, 1, 1, 1))
        self.assertEqual(complete_bipartite(2, 3).edge_count, 6)
        self.assertEqual(petersen().edge_count, 15)
        self.assertEqual(incidence_k4().degrees(), (3, 3, 3, 3, 2, 2, 2, 2, 2, 2))

    def test_2_invalid(self):
        """Test invalid builder parameters."""
        for builder, args in (
            (empty_graph, (0,)),
            (complete_graph, (0,)),
            (cycle, (2,)),
            (path, ("3",)),
            (complete_bipartite, (0, 2))
        ):
            with self.assertRaises(InvalidParamsError):
                builder(*args)

    def test_3_blocks(self):
        """Test block metadata."""
        self.assertEqual(star(3).blocks, (("center", 0, 1), ("leaves", 1, 3)))
        self.assertEqual(complete_bipartite(2, 3).blocks, (("A", 0, 2), ("B", 2, 3)))
        self.assertEqual(
            fig8(6, 5, 4).blocks,
            (("Kn", 0, 4), ("e1", 4, 2), ("Kd", 6, 1), ("e2", 7, 2), ("Km", 9, 2))
        )


class TestChains(unittest.TestCase):
    """Chain Tests"""
    def test_1_chain_join(self):
        """Test that only consecutive factors are joined."""
        self.assertEqual(chain_join(GroupSpec([Graph(1)] * 3)), path(3))
        self.assertEqual(GroupSpec([Graph(1)] * 3, closed=True).build(), cycle(3))
        self.assertEqual(g1(1, 1), path(3))
        self.assertEqual(g1(2, 3).edge_count, 12)
        self.assertEqual(join(Graph(1), Graph(2)), star(2))

    def test_2_cyclic_chain(self):
        """Test cyclic chains of empty blocks."""
        self.assertEqual(g2(1, 1), cycle(4))
        self.assertEqual(g3(1, 1, 3), cycle(6))
        self.assertEqual(g4().order, 12)
        self.assertEqual(g5().order, 15)
        self.assertEqual(diameter(g3(2, 3, 3)), 3)

    def test_3_invalid(self):
        """Test invalid chains."""
        with self.assertRaises(InvalidParamsError):
            GroupSpec([])

        with self.assertRaises(InvalidParamsError):
            GroupSpec([3])

        with self.assertRaises(InvalidParamsError):
            chain_join(GroupSpec([Graph(1)]))

        with self.assertRaises(InvalidParamsError):
            chain_join(GroupSpec([Graph(1)] * 3, closed=True))

        with self.assertRaises(InvalidParamsError):
            cyclic_chain(GroupSpec([Graph(1)] * 2, closed=True))

        with self.assertRaises(InvalidParamsError):
            g3(1, 2, 1)

    def test_4_empty_block_families(self):
        """Test the predicted lambda of the empty-block families."""
        self.assertEqual(classify(g1(1, 3), 1).verdict, predicted(predict_g1(1, 3)))
        self.assertEqual(classify(g1(3, 2), 1).verdict, predicted(predict_g1(3, 2)))
        self.assertEqual(classify(g4(), 1).verdict, Classification.quasi(1, Fraction(7, 5)))
        self.assertEqual(classify(g5(), 1).verdict, Classification.quasi(1, Fraction(8, 7)))
        self.assertEqual(predict_g3(1, 2, 4), (7, 5, 1))
        self.assertEqual(predict_g3(2, 3, 3), (8, 7, 1))
        self.assertEqual(classify(g3(3, 2, 3), 1).verdict, predicted(predict_g3(3, 2, 3)))


class TestHGraph(unittest.TestCase):
    """H-Graph Tests"""
    def test_1_spec(self):
        """Test the side data of an H-graph spec."""
        spec = HGraphSpec(3, incidence_k4(), 2)
        self.assertEqual((spec.t1, spec.t2, spec.n1, spec.n2), (3, 2, 4, 6))
        self.assertTrue(spec.satisfies_quasi_condition)
        self.assertFalse(spec.satisfies_balanced_condition)
        self.assertEqual(spec.claimed_lambda, Fraction(8, 7))
        self.assertEqual(spec.edge_ratios(), [(7, 8), (8, 7), (7, 8)])

    def test_2_build(self):
        """Test building H-graphs."""
        g = h_graph(HGraphSpec(3, incidence_k4(), 2))
        self.assertEqual(g.order, 15)
        self.assertEqual(g.blocks, (("A", 0, 3), ("core", 3, 10), ("D", 13, 2)))
        self.assertEqual(classify(g, 1).verdict, Classification.quasi(1, Fraction(8, 7)))
        self.assertEqual(h_graph(HGraphSpec(1, complete_graph(2), 1)), path(4))

    def test_3_balanced(self):
        """Test the balanced H-graph condition."""
        spec = HGraphSpec(1, cycle(6), 1)
        self.assertTrue(spec.satisfies_balanced_condition)
        self.assertTrue(classify(h_graph(spec), 1).verdict.is_balanced)

    def test_4_invalid(self):
        """Test invalid H-graph specs."""
        for m, core, k in (
            (0, incidence_k4(), 1),
            (1, cycle(5), 1),
            (1, path(4), 1),
            (1, Graph(1), 1),
            (5, incidence_k4(), 1)
        ):
            with self.assertRaises(InvalidParamsError):
                HGraphSpec(m, core, k)


class TestProducts(unittest.TestCase):
    """Product Tests"""
    def test_1_corona(self):
        """Test the corona labels."""
        g = corona(complete_graph(2), Graph(1))
        self.assertEqual(g, Graph(4, [(0, 1), (0, 2), (1, 3)]))
        self.assertEqual(g.blocks, (("G", 0, 2), ("H0", 2, 1), ("H1", 3, 1)))
        self.assertEqual(corona(Graph(1), Graph(3)), star(3))

    def test_2_tensor(self):
        """Test the tensor product labels."""
        self.assertEqual(tensor(complete_graph(2), complete_graph(2)), Graph(4, [(0, 3), (1, 2)]))
        self.assertEqual(tensor(path(3), complete_graph(2)).edge_count, 4)

    def test_3_complement(self):
        """Test the complement."""
        self.assertEqual(complement(path(3)), Graph(3, [(0, 2)]))
        self.assertEqual(complement(Graph(3)), complete_graph(3))

    def test_4_pendants(self):
        """Test complete graphs with pendants."""
        g = complete_with_pendants(3, [2, 0])
        self.assertEqual(g, Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (2, 4)]))
        self.assertEqual(g.blocks, (("K", 0, 3), ("pendants", 3, 2)))

        for q, roots in ((3, [0]), (4, [0, 1]), (4, [0, 1, 2, 3]), (5, [1, 3])):
            g = complete_with_pendants(q, roots)
            self.assertEqual(classify(g, 2).verdict, Classification.quasi(2, g.order - 2))

        for q, roots in ((3, [0, 0]), (3, []), (3, [3]), (1, [0]), (2, [0, 1, 1])):
            with self.assertRaises(InvalidParamsError):
                complete_with_pendants(q, roots)

    @settings(max_examples=100, deadline=None)
    @given(graphs(), graphs())
    def test_5_product_sizes(self, g, h):
        """Test the vertex and edge counts of every product."""
        c = corona(g, h)
        self.assertEqual(c.order, g.order * (1 + h.order))
        self.assertEqual(c.edge_count, g.edge_count + g.order * (h.edge_count + h.order))

        t = tensor(g, h)
        self.assertEqual(t.order, g.order * h.order)
        self.assertEqual(t.edge_count, 2 * g.edge_count * h.edge_count)

        j = join(g, h)
        self.assertEqual(j.order, g.order + h.order)
        self.assertEqual(j.edge_count, g.edge_count + h.edge_count + g.order * h.order)

    @settings(max_examples=50, deadline=None)
    @given(graphs())
    def test_6_complement_involution(self, g):
        """Test that the complement is an involution that splits the complete graph."""
        c = complement(g)
        self.assertEqual(c.order, g.order)
        self.assertEqual(c.edge_count, g.order * (g.order - 1) // 2 - g.edge_count)
        self.assertFalse(set(c.edges) & set(g.edges))
        self.assertEqual(complement(c), g)


class TestCompleteBlockFamilies(unittest.TestCase):
    """Complete-Block Family Tests"""
    def test_1_fig7(self):
        """Test the three-clique chain."""
        g = fig7(3, 1, 2)
        self.assertEqual(g.order, 6)
        self.assertEqual(diameter(g), 2)
        self.assertEqual(classify(g, 2).verdict, predicted(predict_fig7(3, 1, 2)))

    def test_2_fig8(self):
        """Test three cliques sharing edges."""
        g = fig8(6, 5, 4)
        self.assertEqual(g.order, 11)
        self.assertEqual(diameter(g), 3)
        self.assertEqual(classify(g, 3).verdict, predicted(predict_fig8(6, 5, 4)))

    def test_3_fig9(self):
        """Test the ring of four cliques."""
        g = fig9(6, 5)
        self.assertEqual(g.order, 14)
        self.assertEqual(classify(g, 3).verdict, predicted(predict_fig9(6, 5)))

    def test_4_even_family(self):
        """Test the even ring family."""
        g = even_family(2, 6, 5)
        self.assertEqual(g.order, 21)
        self.assertEqual(diameter(g), 4)
        self.assertEqual(predict_even_family(2, 6, 5), (9, 8, 4))
        self.assertEqual(classify(g, 4).verdict, predicted(predict_even_family(2, 6, 5)))

    def test_5_odd_family(self):
        """Test the odd family."""
        g = odd_family(2, 4, 6, 5)
        self.assertEqual(g.order, 19)
        self.assertEqual(diameter(g), 5)
        self.assertEqual(predict_odd_family(2, 4, 6, 5), (10, 9, 5))
        self.assertEqual(classify(g, 5).verdict, Classification.quasi(5, Fraction(10, 9)))

    def test_6_invalid(self):
        """Test invalid family parameters."""
        for builder, args in (
            (fig7, (2, 1, 2)),
            (fig8, (6, 4, 4)),
            (fig8, (6, 5, 2)),
            (fig9, (5, 5)),
            (even_family, (1, 6, 5)),
            (odd_family, (2, 2, 6, 5)),
            (odd_family, (2, 4, 5, 6))
        ):
            with self.assertRaises(InvalidParamsError):
                builder(*args)

        with self.assertRaises(InvalidParamsError):
            clique_ring([5, 5])

        with self.assertRaises(InvalidParamsError):
            clique_ring([5, 5, 4])

    def test_7_family_table(self):
        """Test building families by name."""
        self.assertEqual(build_family("g1", {"m": 1, "n": 3, "k": None}), g1(1, 3))
        self.assertEqual(build_family("petersen", {}), petersen())
        self.assertEqual(quasi_n_family("fig7", {"n": 3, "d": 1, "m": 2}), fig7(3, 1, 2))

        with self.assertRaises(InvalidParamsError):
            build_family("nope", {})

        with self.assertRaises(InvalidParamsError):
            build_family("g1", {"m": 1})

        with self.assertRaises(InvalidParamsError):
            quasi_n_family("g1", {"m": 1, "n": 3})
