"""Quasi DB - Graph Formats

Two text formats are supported:

graph6    - the standard short graph6 format (orders 1..62), one graph per line, an optional
            ">>graph6<<" header is accepted
edge list - a first line holding the order, then one "u v" line per edge; blank lines and lines
            starting with "#" are ignored, duplicate edges collapse
"""

import math

import networkx as nx

from .constants import GRAPH6_MAX_ORDER
from .error import EnvelopeError, GraphFormatError, InvalidParamsError
from .graph import Graph


GRAPH6_HEADER = ">>graph6<<"


# Functions
# =========
def parse_graph6(text, line=None):
    """Parse one graph6 line into a graph."""
    s = text.strip()

    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()

    if not s:
        raise GraphFormatError("empty graph6 string", line)

    # Every byte must be printable graph6 data
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} at offset {pos} is outside the graph6 range", line)

    # Only the short header (one byte, orders up to 62) is supported
    order = ord(s[0]) - 63

    if order > GRAPH6_MAX_ORDER:
        raise GraphFormatError(f"header byte {s[0]!r} is not a short-format graph6 header", line)

    if order < 1:
        raise GraphFormatError("graph6 header encodes an empty graph", line)

    expected = math.ceil(order * (order - 1) // 2 / 6)

    if len(s) - 1 != expected:
        raise GraphFormatError(
            f"expected {expected} payload bytes for order {order}, got {len(s) - 1}", line
        )

    return Graph.from_networkx(nx.from_graph6_bytes(s.encode("ascii")))


def to_graph6(g):
    """Encode a graph as a short-format graph6 line (no header, no newline)."""
    if g.order > GRAPH6_MAX_ORDER:
        raise EnvelopeError(f"order {g.order} exceeds the graph6 short-format limit {GRAPH6_MAX_ORDER}")

    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def parse_edge_list(text):
    """Parse the edge-list format into a graph."""
    order = None
    edges = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()

        # Skip blanks and comments
        if not line or line.startswith("#"):
            continue

        tokens = line.split()

        try:
            values = [int(token) for token in tokens]

        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line_no) from None

        # Is this the order line?
        if order is None:
            order = values[0]

            if order < 1:
                raise GraphFormatError(f"order must be positive, got {order}", line_no)

            values = values[1:]

            if not values:
                continue

        if len(values) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line_no)

        u, v = values

        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_no)

        if not (0 <= u < order and 0 <= v < order):
            raise GraphFormatError(f"vertex out of range 0..{order - 1} in {line!r}", line_no)

        edges.append((u, v))

    if order is None:
        raise GraphFormatError("missing order line")

    try:
        return Graph(order, edges)

    except InvalidParamsError as e:
        raise GraphFormatError(str(e)) from None


def to_edge_list(g):
    """Encode a graph in the edge-list format."""
    lines = [str(g.order)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph6_lines(lines):
    """Yield (line number, graph, error) for every non-blank line; one of graph/error is None."""
    for line_no, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue

        try:
            yield line_no, parse_graph6(raw, line_no), None

        except GraphFormatError as e:
            yield line_no, None, e


def format_blocks(g):
    """Return the block-metadata comment line for a built graph."""
    parts = [f"{label}={start}-{start + size - 1}" for label, start, size in g.blocks]
    return "# blocks: " + " ".join(parts) if parts else "# blocks: none"
