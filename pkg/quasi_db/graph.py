"""Quasi DB - Graph Classes

A graph is an immutable simple undirected graph on the dense vertex labels 0..order-1. Builders may attach
block metadata (a tuple of (label, first vertex, size) entries) describing which labels belong to which
factor; the metadata travels with the graph but takes no part in equality.

The distance matrix holds every hop distance of a connected graph. Disconnected graphs are valid graph
values, but every distance-based operation rejects them with a DisconnectedGraphError naming an
unreachable pair.
"""

from collections import Counter

import networkx as nx

from .error import DisconnectedGraphError, InvalidParamsError


# Classes
# =======
class Graph(object):
    """An immutable simple undirected graph."""
    def __init__(self, order, edges=(), blocks=()):
        """Setup this graph."""
        if not isinstance(order, int) or order < 1:
            raise InvalidParamsError(f"graph order must be a positive integer, got {order!r}")

        normalized = set()

        for u, v in edges:
            if u == v:
                raise InvalidParamsError(f"self-loop at vertex {u}")

            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParamsError(f"edge {u}-{v} is out of range for order {order}")

            normalized.add((min(u, v), max(u, v)))

        adjacency = [set() for _ in range(order)]

        for u, v in normalized:
            adjacency[u].add(v)
            adjacency[v].add(u)

        self._order = order
        self._edges = frozenset(normalized)
        self._adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        self._blocks = tuple(blocks)

    def __eq__(self, other):
        """Compare two graphs by order and edge set (same labeling)."""
        if not isinstance(other, Graph):
            return NotImplemented

        return self._order == other._order and self._edges == other._edges

    def __hash__(self):
        """Return the hash of this graph."""
        return hash((self._order, self._edges))

    def __str__(self):
        """Return the string representation of this graph."""
        return f"Graph(order={self._order}, edges={list(self.edges)})"

    def __repr__(self):
        """Return the string representation of this graph."""
        return str(self)

    @property
    def order(self):
        """The number of vertices."""
        return self._order

    @property
    def edges(self):
        """The edges as a sorted tuple of (u, v) pairs with u < v."""
        return tuple(sorted(self._edges))

    @property
    def edge_count(self):
        """The number of edges."""
        return len(self._edges)

    @property
    def blocks(self):
        """Block metadata recorded by the builder that produced this graph."""
        return self._blocks

    @property
    def min_degree(self):
        """The minimum vertex degree."""
        return min(len(nbrs) for nbrs in self._adj)

    def vertices(self):
        """Return the vertex labels."""
        return range(self._order)

    def neighbors(self, u):
        """Return the neighbors of a vertex."""
        return self._adj[u]

    def degree(self, u):
        """Return the degree of a vertex."""
        return len(self._adj[u])

    def degrees(self):
        """Return the degree of every vertex in label order."""
        return tuple(len(nbrs) for nbrs in self._adj)

    def has_edge(self, u, v):
        """Return True if u and v are adjacent."""
        return v in self._adj[u]

    def add_edge(self, u, v):
        """Return a copy of this graph with one more edge."""
        return Graph(self._order, list(self._edges) + [(u, v)], self._blocks)

    def remove_edge(self, u, v):
        """Return a copy of this graph without the edge uv."""
        if not self.has_edge(u, v):
            raise InvalidParamsError(f"{u}-{v} is not an edge")

        edge = (min(u, v), max(u, v))
        return Graph(self._order, [e for e in self._edges if e != edge], self._blocks)

    def disjoint_union(self, other):
        """Return the disjoint union; the other graph's labels are shifted past this graph's."""
        shift = self._order
        edges = list(self._edges) + [(u + shift, v + shift) for u, v in other._edges]
        return Graph(self._order + other._order, edges)

    def with_blocks(self, blocks):
        """Return this graph carrying the given block metadata."""
        return Graph(self._order, self._edges, blocks)

    def to_networkx(self):
        """Return a networkx graph with nodes added in label order."""
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._order))
        nxg.add_edges_from(self._edges)
        return nxg

    @classmethod
    def from_networkx(cls, nxg):
        """Build a graph from a networkx graph, relabeling nodes 0..n-1 in node order."""
        relabeled = nx.convert_node_labels_to_integers(nx.Graph(nxg))
        return cls(relabeled.number_of_nodes(), relabeled.edges())


class DistanceMatrix(object):
    """All-pairs hop distances of a connected graph."""
    def __init__(self, rows):
        """Setup this distance matrix."""
        self._rows = tuple(tuple(row) for row in rows)

    @property
    def order(self):
        """The number of vertices."""
        return len(self._rows)

    @property
    def diameter(self):
        """The largest distance between two vertices."""
        return max(max(row) for row in self._rows)

    def dist(self, u, v):
        """Return the distance between u and v."""
        return self._rows[u][v]

    def row(self, u):
        """Return the distances from u to every vertex."""
        return self._rows[u]


# Functions
# =========
def all_pairs_distances(g):
    """Return the distance matrix of a connected graph."""
    nxg = g.to_networkx()
    rows = []

    for u, lengths in nx.all_pairs_shortest_path_length(nxg):
        # Is some vertex unreachable?
        if len(lengths) < g.order:
            missing = min(set(g.vertices()) - set(lengths))
            raise DisconnectedGraphError(
                f"graph is disconnected: no path between {u} and {missing}",
                witness=(u, missing)
            )

        rows.append([lengths[v] for v in g.vertices()])

    return DistanceMatrix(rows)


def is_connected(g):
    """Return True if the graph is connected."""
    return nx.is_connected(g.to_networkx())


def two_coloring(g):
    """Return a proper 2-coloring as a tuple of 0/1, or None if the graph is not bipartite.

    The smallest vertex of every component gets color 0, so the coloring is deterministic.
    """
    nxg = g.to_networkx()

    try:
        color = nx.bipartite.color(nxg)

    except nx.NetworkXError:
        return None

    for component in nx.connected_components(nxg):
        if color[min(component)] == 1:
            for u in component:
                color[u] = 1 - color[u]

    return tuple(color[u] for u in g.vertices())


def is_bipartite(g):
    """Return True if the graph has no odd cycle."""
    return two_coloring(g) is not None


def odd_cycle(g):
    """Return the vertices of an odd cycle in order, or None if the graph is bipartite."""
    nxg = g.to_networkx()

    for component in nx.connected_components(nxg):
        root = min(component)
        paths = nx.single_source_shortest_path(nxg, root)

        for u, v in g.edges:
            if u not in component:
                continue

            pu, pv = paths[u], paths[v]

            # An edge inside one BFS level closes an odd cycle
            if len(pu) != len(pv):
                continue

            i = 0

            while i + 1 < len(pu) and pu[i + 1] == pv[i + 1]:
                i += 1

            return pu[i:] + list(reversed(pv[i + 1:]))

    return None


def diameter(g):
    """Return the diameter of a connected graph."""
    return all_pairs_distances(g).diameter


def degree_multiset(g):
    """Return the degrees as a multiset (degree -> number of vertices)."""
    return Counter(g.degrees())
