"""Quasi DB - Symmetry Functions

Automorphisms are found by VF2 matching of the graph onto itself. Every vertex carries a profile (its
degree and the multiset of its hop distances) and only vertices with equal profiles may be matched,
which prunes the search.
"""

from collections import Counter

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .constants import AUTOMORPHISM_MAX_ORDER
from .error import EnvelopeError


# Functions
# =========
def _profiled(g):
    """Return the networkx graph with a profile attribute on every node."""
    nxg = g.to_networkx()

    for u, lengths in nx.all_pairs_shortest_path_length(nxg):
        nxg.nodes[u]["profile"] = (g.degree(u), tuple(sorted(Counter(lengths.values()).items())))

    return nxg


def automorphisms(g):
    """Return every automorphism as a permutation tuple p with p[u] the image of u, sorted."""
    if g.order > AUTOMORPHISM_MAX_ORDER:
        raise EnvelopeError(
            f"automorphisms are limited to order {AUTOMORPHISM_MAX_ORDER}, got order {g.order}"
        )

    nxg = _profiled(g)
    matcher = GraphMatcher(nxg, nxg, node_match=lambda a, b: a["profile"] == b["profile"])
    return sorted(tuple(mapping[u] for u in g.vertices()) for mapping in matcher.isomorphisms_iter())


def edge_orbit(g, edge, perms=None):
    """Return the orbit of one edge under the automorphism group."""
    perms = automorphisms(g) if perms is None else perms
    u, v = edge
    return frozenset((min(p[u], p[v]), max(p[u], p[v])) for p in perms)


def is_edge_transitive(g):
    """Return True if the automorphism group acts transitively on the edges."""
    if g.edge_count == 0:
        return True

    return len(edge_orbit(g, g.edges[0])) == g.edge_count
