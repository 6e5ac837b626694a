"""Quasi DB - Graph Enumeration

Graphs are enumerated one representative per isomorphism class by vertex extension: every graph of
order n arises from a graph of order n-1 plus one new vertex (connected graphs from connected graphs,
the new vertex getting a nonempty neighbourhood). Candidates are bucketed by edge count, degree
sequence and Weisfeiler-Lehman hash, and isomorphism is confirmed with VF2 before a candidate is
dropped. The first candidate found in a class is its representative.

Results are sorted by (edge count, degree sequence, graph6) so every run yields the same stream.
Orders above IN_PROCESS_MAX_ORDER are only available through a graph6 ingest file.
"""

import logging
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .constants import IN_PROCESS_MAX_ORDER, max_enumeration_order
from .error import EnvelopeError, InvalidParamsError
from .formats import read_graph6_lines, to_graph6
from .graph import Graph, is_bipartite, is_connected


logger = logging.getLogger(__name__)


# Classes
# =======
class EnumerationScope(object):
    """Which graphs a sweep visits."""
    def __init__(self, max_order, connected=True, bipartite=None, min_degree=None, degree_set_size=None,
                 min_order=1, ingest=None):
        """Setup this scope.

        bipartite is None (no filter), True or False. min_degree keeps graphs whose minimum degree is at
        least the bound; degree_set_size keeps graphs with exactly that many distinct degrees. ingest is
        the path of a graph6 file that replaces in-process enumeration.
        """
        envelope = max_enumeration_order()

        if not isinstance(max_order, int) or not 1 <= max_order <= envelope:
            raise EnvelopeError(f"max order must be between 1 and {envelope}, got {max_order!r}")

        if not isinstance(min_order, int) or not 1 <= min_order <= max_order:
            raise InvalidParamsError(f"min order must be between 1 and {max_order}, got {min_order!r}")

        if ingest is None and max_order > IN_PROCESS_MAX_ORDER:
            raise EnvelopeError(
                f"orders above {IN_PROCESS_MAX_ORDER} need a graph6 ingest file, got max order {max_order}"
            )

        self.max_order = max_order
        self.min_order = min_order
        self.connected = connected
        self.bipartite = bipartite
        self.min_degree = min_degree
        self.degree_set_size = degree_set_size
        self.ingest = ingest

    def __str__(self):
        """Return the string representation of this scope."""
        return (
            f"EnumerationScope(orders={self.min_order}..{self.max_order}, connected={self.connected}, "
            f"bipartite={self.bipartite}, min_degree={self.min_degree}, "
            f"degree_set_size={self.degree_set_size}, ingest={self.ingest})"
        )

    def __repr__(self):
        """Return the string representation of this scope."""
        return str(self)

    def accepts(self, g):
        """Return True if the graph passes every filter of this scope."""
        if not self.min_order <= g.order <= self.max_order:
            return False

        if self.connected and not is_connected(g):
            return False

        if self.min_degree is not None and g.min_degree < self.min_degree:
            return False

        if self.degree_set_size is not None and len(set(g.degrees())) != self.degree_set_size:
            return False

        if self.bipartite is not None and is_bipartite(g) != self.bipartite:
            return False

        return True

    def graphs(self):
        """Yield every graph of this scope in deterministic order."""
        if self.ingest is not None:
            yield from sorted(
                (g for g in read_graph6_file(self.ingest) if self.accepts(g)), key=_sort_key
            )
            return

        for order in range(self.min_order, self.max_order + 1):
            classes = _connected_classes(order) if self.connected else _all_classes(order)

            for g in classes:
                if self.accepts(g):
                    yield g


# Functions
# =========
def _sort_key(g):
    """Return the (edge count, degree sequence, graph6) key graph streams are sorted by."""
    return g.edge_count, tuple(sorted(g.degrees())), to_graph6(g)


def _extend(classes, order, allow_isolated):
    """Return one representative per class among all one-vertex extensions of the given graphs."""
    buckets = {}
    found = []
    new = order - 1

    for base in classes:
        for size in range(0 if allow_isolated else 1, order):
            for nbrs in combinations(range(new), size):
                candidate = Graph(order, list(base.edges) + [(v, new) for v in nbrs])
                nxg = candidate.to_networkx()
                key = (
                    candidate.edge_count,
                    tuple(sorted(candidate.degrees())),
                    nx.weisfeiler_lehman_graph_hash(nxg)
                )
                bucket = buckets.setdefault(key, [])

                if any(nx.is_isomorphic(nxg, other) for other in bucket):
                    continue

                bucket.append(nxg)
                found.append(candidate)

    found.sort(key=_sort_key)
    return tuple(found)


@lru_cache(maxsize=None)
def _connected_classes(order):
    """Return the connected graphs of one order, one per isomorphism class."""
    if order == 1:
        return (Graph(1),)

    classes = _extend(_connected_classes(order - 1), order, allow_isolated=False)
    logger.info("order %d: %d connected classes", order, len(classes))
    return classes


@lru_cache(maxsize=None)
def _all_classes(order):
    """Return all graphs of one order, connected or not, one per isomorphism class."""
    if order == 1:
        return (Graph(1),)

    classes = _extend(_all_classes(order - 1), order, allow_isolated=True)
    logger.info("order %d: %d classes", order, len(classes))
    return classes


def enumerate_connected(scope):
    """Yield one representative per isomorphism class of connected graphs meeting the scope's filters."""
    if not scope.connected:
        raise InvalidParamsError("enumerate_connected needs a scope with connected=True")

    yield from scope.graphs()


def enumerate_all(order):
    """Return every graph of the given order (connected or not), one per isomorphism class."""
    if not isinstance(order, int) or not 1 <= order <= IN_PROCESS_MAX_ORDER:
        raise EnvelopeError(f"order must be between 1 and {IN_PROCESS_MAX_ORDER}, got {order!r}")

    return list(_all_classes(order))


def read_graph6_file(path):
    """Yield the graphs of a graph6 file; a bad line raises with its line number."""
    with open(path, "r", encoding="ascii", errors="replace") as f:
        for line_no, g, error in read_graph6_lines(f):
            if error is not None:
                raise error

            logger.debug("ingested %s line %d: order %d", path, line_no, g.order)
            yield g
