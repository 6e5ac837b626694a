"""Quasi DB - Graph Constructions

Every builder returns a Graph with block-contiguous labels: the factors are laid out one after another
in the order they are listed, and the returned graph's blocks metadata records (label, first vertex,
size) for each block.

The chain operation joins each factor completely to the next one only (factor i to factor i+1); a cyclic
chain also joins the last factor to the first. The complete-block families are rings or paths of
cliques in which neighbouring cliques share one edge; their builders take the post-split block sizes
(K_{n-4}, K_2, ...) so the shared K_2 blocks are explicit.

Every family also has a predictor returning (w_x, w_y, n): the W-cardinalities realized by every vertex
pair at the family's distance n, larger side first.
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx

from .balance import degree_profile
from .error import InvalidParamsError
from .graph import Graph, two_coloring


# Classes
# =======
class GroupSpec(object):
    """An ordered list of chain factors."""
    def __init__(self, factors, closed=False):
        """Setup this group spec."""
        self.factors = list(factors)
        self.closed = closed

        if not self.factors:
            raise InvalidParamsError("a chain needs at least one factor")

        for factor in self.factors:
            if not isinstance(factor, Graph):
                raise InvalidParamsError(f"chain factor {factor!r} is not a graph")

    def build(self):
        """Build the chain or cyclic chain."""
        return cyclic_chain(self) if self.closed else chain_join(self)


class HGraphSpec(object):
    """Parameters of H(m, G, k) over a biregular bipartite core."""
    def __init__(self, m, core, k):
        """Setup this H-graph spec."""
        _require("m", m, 1)
        _require("k", k, 1)

        profile = degree_profile(core)

        if core.edge_count == 0 or profile.biregular is None:
            raise InvalidParamsError("the core must be a nonempty connected biregular bipartite graph")

        self.m = m
        self.k = k
        self.core = core
        self.t1, self.t2, self.n1, self.n2 = profile.biregular

        if not 1 <= self.n1 + m <= self.n2 + k:
            raise InvalidParamsError(
                f"H-graph needs 1 <= n1+m <= n2+k, got n1+m={self.n1 + m} and n2+k={self.n2 + k}"
            )

    @property
    def satisfies_quasi_condition(self):
        """True when t1 = n2-m, t2 = n1-k and n2+k != n1+m."""
        return (
            self.t1 == self.n2 - self.m
            and self.t2 == self.n1 - self.k
            and self.n2 + self.k != self.n1 + self.m
        )

    @property
    def satisfies_balanced_condition(self):
        """True when t1 = t2 = n1-k = n2-m."""
        return self.t1 == self.t2 == self.n1 - self.k == self.n2 - self.m

    @property
    def claimed_lambda(self):
        """The lambda (n2+k)/(n1+m) stated for quasi H-graphs."""
        return Fraction(self.n2 + self.k, self.n1 + self.m)

    def edge_ratios(self):
        """Return the exact W-cardinality pairs of the three edge classes A-B, B-C and C-D."""
        m, k, t1, t2, n1, n2 = self.m, self.k, self.t1, self.t2, self.n1, self.n2
        return [
            (n1 + n2 - t1, m + k + t1),
            (m + n1 + t1 - t2, k + n2 + t2 - t1),
            (m + k + t2, n1 + n2 - t2)
        ]


# Functions
# =========
def _require(name, value, minimum):
    """Raise if an integer parameter is below its bound."""
    if not isinstance(value, int) or value < minimum:
        raise InvalidParamsError(f"{name} must be an integer >= {minimum}, got {value!r}")


def _assemble(factors, joins, labels=None):
    """Lay the factors out block by block and fully join each listed pair of factor indexes."""
    offsets = []
    edges = []
    total = 0

    for factor in factors:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in factor.edges)
        total += factor.order

    for i, j in joins:
        for u in range(offsets[i], offsets[i] + factors[i].order):
            for v in range(offsets[j], offsets[j] + factors[j].order):
                edges.append((u, v))

    if labels is None:
        labels = [f"F{i}" for i in range(len(factors))]

    blocks = [(label, offset, factor.order) for label, offset, factor in zip(labels, offsets, factors)]
    return Graph(total, edges, blocks)


def empty_graph(m):
    """Return mK1, the graph with m vertices and no edges."""
    _require("m", m, 1)
    return Graph(m, (), [("V", 0, m)])


def complete_graph(q):
    """Return K_q."""
    _require("q", q, 1)
    return Graph(q, combinations(range(q), 2), [("K", 0, q)])


def cycle(q):
    """Return C_q labeled around the cycle."""
    _require("q", q, 3)
    return Graph(q, [(i, (i + 1) % q) for i in range(q)], [("C", 0, q)])


def path(q):
    """Return the path on q vertices labeled along the path."""
    _require("q", q, 1)
    return Graph(q, [(i, i + 1) for i in range(q - 1)], [("P", 0, q)])


def star(q):
    """Return K_{1,q}; the center is vertex 0."""
    _require("q", q, 1)
    return _assemble([empty_graph(1), empty_graph(q)], [(0, 1)], ["center", "leaves"])


def complete_bipartite(a, b):
    """Return K_{a,b}; vertices 0..a-1 form the first side."""
    _require("a", a, 1)
    _require("b", b, 1)
    return _assemble([empty_graph(a), empty_graph(b)], [(0, 1)], ["A", "B"])


def incidence_k4():
    """Return the vertex-edge incidence graph of K4 (equivalently K4 with every edge subdivided).

    Vertices 0..3 are the K4 vertices (degree 3); 4..9 are its edges in lexicographic order (degree 2).
    """
    edges = []

    for index, (a, b) in enumerate(combinations(range(4), 2)):
        edges.append((a, 4 + index))
        edges.append((b, 4 + index))

    return Graph(10, edges, [("vertices", 0, 4), ("edges", 4, 6)])


def petersen():
    """Return the Petersen graph."""
    return Graph.from_networkx(nx.petersen_graph())


def chain_join(spec):
    """Return G1 * G2 * ... * Gk with consecutive factors fully joined."""
    if spec.closed:
        raise InvalidParamsError("chain_join needs an open group spec")

    if len(spec.factors) < 2:
        raise InvalidParamsError(f"a chain needs at least 2 factors, got {len(spec.factors)}")

    joins = [(i, i + 1) for i in range(len(spec.factors) - 1)]
    return _assemble(spec.factors, joins)


def cyclic_chain(spec):
    """Return the chain with the last factor also joined to the first."""
    if not spec.closed:
        raise InvalidParamsError("cyclic_chain needs a closed group spec")

    count = len(spec.factors)

    if count < 3:
        raise InvalidParamsError(f"a cyclic chain needs at least 3 factors, got {count}")

    joins = [(i, (i + 1) % count) for i in range(count)]
    return _assemble(spec.factors, joins)


def h_graph(spec):
    """Return H(m, G, k): A (m vertices) joined to side B of the core, D (k vertices) joined to side C.

    Labels: A first, then the core with its own labels shifted by m, then D.
    """
    core = spec.core
    coloring = two_coloring(core)
    side_b = [u for u in core.vertices() if coloring[u] == 0]
    side_c = [u for u in core.vertices() if coloring[u] == 1]
    m, k = spec.m, spec.k
    d_start = m + core.order
    edges = [(u + m, v + m) for u, v in core.edges]
    edges.extend((a, b + m) for a in range(m) for b in side_b)
    edges.extend((c + m, d_start + d) for c in side_c for d in range(k))
    blocks = [("A", 0, m), ("core", m, core.order), ("D", d_start, k)]
    return Graph(d_start + k, edges, blocks)


def join(g, h):
    """Return the join G + H."""
    return chain_join(GroupSpec([g, h]))


def corona(g, h):
    """Return the corona G o H.

    Labels: G first, then copy i of H for every vertex i of G; vertex i is joined to all of copy i.
    """
    copies = [g] + [h] * g.order
    joins = []
    labels = ["G"] + [f"H{i}" for i in range(g.order)]
    graph = _assemble(copies, joins, labels)
    edges = list(graph.edges)

    for i in g.vertices():
        start = g.order + i * h.order
        edges.extend((i, start + j) for j in range(h.order))

    return Graph(graph.order, edges, graph.blocks)


def tensor(g, h):
    """Return the tensor (direct) product; vertex (a, b) gets label a*|V(H)| + b."""
    return Graph.from_networkx(nx.tensor_product(g.to_networkx(), h.to_networkx()))


def complement(g):
    """Return the complement on the same labels."""
    return Graph.from_networkx(nx.complement(g.to_networkx()))


def complete_with_pendants(q, roots):
    """Return K_q with one pendant vertex on each root; pendants get labels q, q+1, ... in root order."""
    _require("q", q, 2)
    roots = list(roots)

    if len(set(roots)) != len(roots):
        raise InvalidParamsError(f"pendant roots must be distinct, got {roots}")

    if not 1 <= len(roots) <= q:
        raise InvalidParamsError(f"need between 1 and {q} roots, got {len(roots)}")

    for root in roots:
        if not 0 <= root < q:
            raise InvalidParamsError(f"root {root} is not a vertex of K_{q}")

    edges = list(combinations(range(q), 2))
    edges.extend((root, q + i) for i, root in enumerate(sorted(roots)))
    return Graph(q + len(roots), edges, [("K", 0, q), ("pendants", q, len(roots))])


# Empty-block families
# ====================
def g1(m, n):
    """Return mK1 * nK1 * mK1."""
    return chain_join(GroupSpec([empty_graph(m), empty_graph(n), empty_graph(m)]))


def g2(m, n):
    """Return the cyclic chain mK1, nK1, mK1, nK1."""
    return g3(m, n, 2)


def g3(m, n, d):
    """Return the cyclic chain of 2d blocks alternating mK1 and nK1 (diameter d)."""
    _require("d", d, 2)
    return cyclic_chain(GroupSpec([empty_graph(m), empty_graph(n)] * d, closed=True))


def g4():
    """Return the cyclic chain K1, 2K1 repeated 4 times."""
    return g3(1, 2, 4)


def g5():
    """Return the cyclic chain 2K1, 3K1 repeated 3 times."""
    return g3(2, 3, 3)


def predict_g1(m, n):
    """Return (larger W, smaller W, 1) for the edges of g1; every edge sees 2m against n."""
    return max(2 * m, n), min(2 * m, n), 1


def predict_g3(m, n, d):
    """W-cardinalities of the edges of g3: an edge's n-block end and m-block end."""
    wx = m * (1 + d // 2) + n * ((d - 1) // 2)
    wy = n * (1 + d // 2) + m * ((d - 1) // 2)
    return max(wx, wy), min(wx, wy), 1


# Complete-block families
# =======================
def fig7(n, d, m):
    """Return K_n * K_d * K_m."""
    _require("d", d, 1)
    _check_sides(n, m, 1)
    return chain_join(GroupSpec([complete_graph(n), complete_graph(d), complete_graph(m)]))


def fig8(n, d, m):
    """Return K_n, K_d, K_m where consecutive cliques share an edge.

    Blocks: K_{n-2}, K_2, K_{d-4}, K_2, K_{m-2}; consecutive blocks are joined and the two K_2 blocks,
    which both lie in K_d, are joined to each other.
    """
    _require("d", d, 5)
    _check_sides(n, m, 3)
    factors = [complete_graph(n - 2), complete_graph(2), complete_graph(d - 4), complete_graph(2),
               complete_graph(m - 2)]
    joins = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]
    return _assemble(factors, joins, ["Kn", "e1", "Kd", "e2", "Km"])


def clique_ring(sizes):
    """Return a ring of cliques K_{s0}, K_{s1}, ... where each clique shares an edge with the next.

    Blocks alternate private K_{s_i - 4} and shared K_2: block 2i is the private part of clique i,
    block 2i+1 the edge shared by cliques i and i+1.
    """
    sizes = list(sizes)

    if len(sizes) < 3:
        raise InvalidParamsError(f"a clique ring needs at least 3 cliques, got {len(sizes)}")

    for size in sizes:
        _require("clique size", size, 5)

    factors = []
    labels = []

    for i, size in enumerate(sizes):
        factors.extend([complete_graph(size - 4), complete_graph(2)])
        labels.extend([f"K{i}", f"S{i}"])

    count = len(factors)
    joins = [(i, (i + 1) % count) for i in range(count)]
    joins.extend(((2 * i - 1) % count, 2 * i + 1) for i in range(len(sizes)))
    return _assemble(factors, joins, labels)


def fig9(n, m):
    """Return the ring of cliques K_m, K_m, K_n, K_n."""
    _check_sides(n, m, 5)
    return clique_ring([m, m, n, n])


def even_family(k, n, m):
    """Return the ring of 4k-2 cliques alternating K_m and K_n (quasi for distance 2k)."""
    _require("k", k, 2)
    _check_sides(n, m, 5)
    return clique_ring([m, n] * (2 * k - 1))


def fig10(n, m):
    """Return the ring of six cliques alternating K_m and K_n."""
    return even_family(2, n, m)


def odd_family(k, p, n, m):
    """Return K_n and K_m linked by two sides of 2(k-1) K_p blocks (quasi for distance 2k+1).

    Ring blocks: K_{n-4}, a, side one, b, K_{m-4}, c, side two, d, where a, b, c, d are K_2 blocks; K_n is
    d + K_{n-4} + a and K_m is b + K_{m-4} + c. A side is a chain of K_p blocks whose end blocks lose the
    two vertices they share with K_n or K_m.
    """
    _require("k", k, 2)
    _require("p", p, 3)
    _check_sides(n, m, 5)
    side = [p] * (2 * (k - 1))
    side[0] -= 2
    side[-1] -= 2

    factors = [complete_graph(n - 4), complete_graph(2)]
    labels = ["Kn", "a"]
    factors.extend(complete_graph(size) for size in side)
    labels.extend(f"P{i}" for i in range(len(side)))
    b = len(factors)
    factors.extend([complete_graph(2), complete_graph(m - 4), complete_graph(2)])
    labels.extend(["b", "Km", "c"])
    factors.extend(complete_graph(size) for size in reversed(side))
    labels.extend(f"Q{i}" for i in range(len(side)))
    factors.append(complete_graph(2))
    labels.append("d")

    count = len(factors)
    joins = [(i, (i + 1) % count) for i in range(count)]
    joins.extend([(1, count - 1), (b, b + 2)])
    return _assemble(factors, joins, labels)


def fig11(p, n, m):
    """Return the odd family for distance 5."""
    return odd_family(2, p, n, m)


def _check_sides(n, m, minimum):
    """Raise unless n > m >= minimum."""
    _require("m", m, minimum)

    if not isinstance(n, int) or n <= m:
        raise InvalidParamsError(f"n must exceed m, got n={n!r} and m={m}")


def predict_fig7(n, d, m):
    """Return (w_x, w_y, n) for the distance-2 pairs of fig7, which lie between K_n and K_m."""
    return n, m, 2


def predict_fig8(n, d, m):
    """Return (w_x, w_y, n) for fig8."""
    return n, m, 3


def predict_fig9(n, m):
    """Return (w_x, w_y, n) for fig9."""
    return n, m, 3


def predict_even_family(k, n, m):
    """Return (w_x, w_y, n) for the even family ring of 4k-2 alternating cliques."""
    return k * n + (k - 1) * m - 4 * k, k * m + (k - 1) * n - 4 * k, 2 * k


def predict_odd_family(k, p, n, m):
    """Return (w_x, w_y, n) for the odd family; each side contributes 2(k-1) K_p blocks."""
    return n + 2 * (k - 1) * p - 4, m + 2 * (k - 1) * p - 4, 2 * k + 1


# Family Table
# ============
FAMILIES = {
    "complete":     (complete_graph, ("q",)),
    "cycle":        (cycle, ("q",)),
    "path":         (path, ("q",)),
    "star":         (star, ("q",)),
    "empty":        (empty_graph, ("m",)),
    "bipartite":    (complete_bipartite, ("m", "n")),
    "petersen":     (petersen, ()),
    "k4-incidence": (incidence_k4, ()),
    "g1":           (g1, ("m", "n")),
    "g2":           (g2, ("m", "n")),
    "g3":           (g3, ("m", "n", "d")),
    "g4":           (g4, ()),
    "g5":           (g5, ()),
    "fig7":         (fig7, ("n", "d", "m")),
    "fig8":         (fig8, ("n", "d", "m")),
    "fig9":         (fig9, ("n", "m")),
    "fig10":        (fig10, ("n", "m")),
    "fig11":        (fig11, ("p", "n", "m")),
    "even":         (even_family, ("k", "n", "m")),
    "odd":          (odd_family, ("k", "p", "n", "m"))
}

QUASI_N_KINDS = ("fig7", "fig8", "fig9", "fig10", "fig11", "even", "odd")


def build_family(kind, params):
    """Build a named family from a dict of integer parameters; unused parameters are ignored."""
    if kind not in FAMILIES:
        raise InvalidParamsError(f"unknown family {kind!r}; expected one of {', '.join(sorted(FAMILIES))}")

    builder, names = FAMILIES[kind]
    missing = [name for name in names if params.get(name) is None]

    if missing:
        raise InvalidParamsError(f"family {kind} needs parameter(s) {', '.join(missing)}")

    return builder(*(params[name] for name in names))


def quasi_n_family(kind, params):
    """Build one of the complete-block families that are quasi for a distance n above 1."""
    if kind not in QUASI_N_KINDS:
        raise InvalidParamsError(f"unknown quasi-n family {kind!r}; expected one of {', '.join(QUASI_N_KINDS)}")

    return build_family(kind, params)
