"""Quasi DB - Balance Functions

For a vertex pair (u, v) at distance n, the W-partition splits the vertex set into the vertices strictly
closer to u, those strictly closer to v, and those at equal distance from both. A graph is classified
for a distance n by looking at the W-cardinalities of every pair at that distance:

balanced   - every pair has |W_u| = |W_v|
quasi      - every pair has ratio exactly lambda or 1/lambda for one shared rational lambda > 1
unbalanced - anything else, including a mixture of balanced and lambda pairs
no-pairs   - no pair of vertices lies at distance n

Lambda is always an exact fraction; floats never enter a classification.
"""

from fractions import Fraction

from .constants import (
    VERDICT_BALANCED,
    VERDICT_NAMES,
    VERDICT_NO_PAIRS,
    VERDICT_QUASI,
    VERDICT_UNBALANCED
)
from .error import InvalidParamsError
from .graph import all_pairs_distances, is_connected, two_coloring


# Exact reduced fraction; numerator and denominator are coprime and the denominator is positive
Rational = Fraction


# Classes
# =======
class WPartition(object):
    """The three W-sets of a vertex pair."""
    def __init__(self, u, v, n, closer_to_u, closer_to_v, equidistant):
        """Setup this partition."""
        self.u = u
        self.v = v
        self.n = n
        self.closer_to_u = frozenset(closer_to_u)
        self.closer_to_v = frozenset(closer_to_v)
        self.equidistant = frozenset(equidistant)

    def __eq__(self, other):
        """Compare two partitions."""
        if not isinstance(other, WPartition):
            return NotImplemented

        return (
            (self.u, self.v, self.n) == (other.u, other.v, other.n)
            and self.closer_to_u == other.closer_to_u
            and self.closer_to_v == other.closer_to_v
            and self.equidistant == other.equidistant
        )

    def __str__(self):
        """Return the string representation of this partition."""
        return f"WPartition({self.u}, {self.v}, n={self.n}, sizes={self.sizes})"

    def __repr__(self):
        """Return the string representation of this partition."""
        return str(self)

    @property
    def sizes(self):
        """The cardinalities (|W_u|, |W_v|, |equidistant|)."""
        return len(self.closer_to_u), len(self.closer_to_v), len(self.equidistant)

    def swapped(self):
        """Return the partition of the pair (v, u)."""
        return WPartition(self.v, self.u, self.n, self.closer_to_v, self.closer_to_u, self.equidistant)


class Classification(object):
    """A verdict for one distance n, with lambda for quasi verdicts."""
    def __init__(self, kind, n, lam=None):
        """Setup this classification."""
        if kind == VERDICT_QUASI:
            lam = Fraction(lam)

            if lam <= 1:
                raise InvalidParamsError(f"lambda must exceed 1, got {lam}")

        else:
            lam = None

        self.kind = kind
        self.n = n
        self.lam = lam

    def __eq__(self, other):
        """Compare two classifications exactly."""
        if not isinstance(other, Classification):
            return NotImplemented

        return (self.kind, self.n, self.lam) == (other.kind, other.n, other.lam)

    def __hash__(self):
        """Return the hash of this classification."""
        return hash((self.kind, self.n, self.lam))

    def __str__(self):
        """Return the string representation of this classification."""
        if self.kind == VERDICT_QUASI:
            return f"QuasiBalanced({self.n}, {self.lam})"

        names = {
            VERDICT_BALANCED: "Balanced",
            VERDICT_UNBALANCED: "Unbalanced",
            VERDICT_NO_PAIRS: "NoPairs"
        }
        return f"{names[self.kind]}({self.n})"

    def __repr__(self):
        """Return the string representation of this classification."""
        return str(self)

    @property
    def name(self):
        """The report spelling of the verdict."""
        return VERDICT_NAMES[self.kind]

    @property
    def is_quasi(self):
        """True for a quasi verdict."""
        return self.kind == VERDICT_QUASI

    @property
    def is_balanced(self):
        """True for a balanced verdict."""
        return self.kind == VERDICT_BALANCED

    @classmethod
    def balanced(cls, n):
        """Return a balanced verdict for distance n."""
        return cls(VERDICT_BALANCED, n)

    @classmethod
    def quasi(cls, n, lam):
        """Return a quasi verdict for distance n with ratio lam."""
        return cls(VERDICT_QUASI, n, lam)

    @classmethod
    def unbalanced(cls, n):
        """Return an unbalanced verdict for distance n."""
        return cls(VERDICT_UNBALANCED, n)

    @classmethod
    def no_pairs(cls, n):
        """Return the verdict for a graph with no pair at distance n."""
        return cls(VERDICT_NO_PAIRS, n)


class BalanceReport(object):
    """Per-pair W-cardinalities at one distance plus the verdict."""
    def __init__(self, n, pairs, verdict):
        """Setup this report."""
        self.n = n
        self.pairs = list(pairs)
        self.verdict = verdict

    def __str__(self):
        """Return the string representation of this report."""
        return f"BalanceReport(n={self.n}, pairs={len(self.pairs)}, verdict={self.verdict})"

    def __repr__(self):
        """Return the string representation of this report."""
        return str(self)

    def header(self):
        """Return the report header line."""
        lam = "-"

        if self.verdict.is_quasi:
            lam = f"{self.verdict.lam.numerator}/{self.verdict.lam.denominator}"

        elif self.verdict.is_balanced:
            lam = "1/1"

        return f"n={self.n} verdict={self.verdict.name} lambda={lam}"

    def to_text(self):
        """Serialize to the line-oriented report format."""
        lines = [self.header()]
        lines.extend(f"{u} {v} {wu} {wv} {eq}" for u, v, wu, wv, eq in self.pairs)
        return "\n".join(lines) + "\n"


class DegreeProfile(object):
    """The distinct degrees and, for biregular bipartite graphs, the side data."""
    def __init__(self, degrees, biregular=None):
        """Setup this profile.

        biregular is None or (t1, t2, n1, n2): the side containing vertex 0 has n1 vertices of degree t1,
        the other side n2 vertices of degree t2.
        """
        self.degrees = frozenset(degrees)
        self.biregular = biregular

    def __str__(self):
        """Return the string representation of this profile."""
        return f"DegreeProfile(degrees={sorted(self.degrees)}, biregular={self.biregular})"

    def __repr__(self):
        """Return the string representation of this profile."""
        return str(self)


# Functions
# =========
def _distances(g, d):
    """Return d, computing it when the caller did not pass one."""
    return d if d is not None else all_pairs_distances(g)


def w_partition(g, d, u, v):
    """Return the W-partition of the pair (u, v)."""
    if u == v:
        raise InvalidParamsError(f"W-partition needs two distinct vertices, got {u} twice")

    for x in (u, v):
        if not 0 <= x < g.order:
            raise InvalidParamsError(f"vertex {x} out of range 0..{g.order - 1}")

    d = _distances(g, d)
    du, dv = d.row(u), d.row(v)
    closer_to_u, closer_to_v, equidistant = [], [], []

    for x in g.vertices():
        if du[x] < dv[x]:
            closer_to_u.append(x)

        elif du[x] > dv[x]:
            closer_to_v.append(x)

        else:
            equidistant.append(x)

    return WPartition(u, v, du[v], closer_to_u, closer_to_v, equidistant)


def w_sizes(d, u, v):
    """Return (|W_u|, |W_v|, |equidistant|) straight from the distance rows."""
    du, dv = d.row(u), d.row(v)
    wu = wv = 0

    for a, b in zip(du, dv):
        if a < b:
            wu += 1

        elif a > b:
            wv += 1

    return wu, wv, len(du) - wu - wv


def verdict_from_pairs(n, pairs):
    """Recompute the classification from (u, v, |Wu|, |Wv|, |eq|) records."""
    if not pairs:
        return Classification.no_pairs(n)

    ratios = set()
    balanced = 0

    for _, _, wu, wv, _ in pairs:
        if wu == wv:
            balanced += 1

        else:
            ratios.add(Fraction(max(wu, wv), min(wu, wv)))

    if balanced == len(pairs):
        return Classification.balanced(n)

    # A single shared lambda and no balanced pair
    if balanced == 0 and len(ratios) == 1:
        return Classification.quasi(n, ratios.pop())

    return Classification.unbalanced(n)


def classify(g, n, d=None):
    """Classify a connected graph for the distance n."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParamsError(f"distance n must be a positive integer, got {n!r}")

    d = _distances(g, d)
    pairs = []

    # Canonical orientation: smaller vertex first
    for u in g.vertices():
        row = d.row(u)

        for v in range(u + 1, g.order):
            if row[v] == n:
                pairs.append((u, v) + w_sizes(d, u, v))

    return BalanceReport(n, pairs, verdict_from_pairs(n, pairs))


def total_distance(g, d, u):
    """Return D(u), the sum of distances from u."""
    return sum(_distances(g, d).row(u))


def total_distances(g, d=None):
    """Return D(u) for every vertex in label order."""
    d = _distances(g, d)
    return tuple(sum(d.row(u)) for u in g.vertices())


def is_transmission_regular(g, d=None):
    """Return True if every vertex has the same total distance."""
    return len(set(total_distances(g, d))) == 1


def parity_check(g, d=None):
    """Return every pair at distance 2 whose total distances have an odd sum.

    The graph must classify as quasi for n=1.
    """
    d = _distances(g, d)

    if not classify(g, 1, d).verdict.is_quasi:
        raise InvalidParamsError("parity check needs a graph that is quasi-balanced for n=1")

    totals = total_distances(g, d)
    return [
        (u, v)
        for u in g.vertices()
        for v in range(u + 1, g.order)
        if d.dist(u, v) == 2 and (totals[u] + totals[v]) % 2 == 1
    ]


def degree_profile(g):
    """Return the distinct degrees and the biregular bipartition, if any."""
    degrees = g.degrees()
    biregular = None

    # The bipartition is only unique for connected graphs
    if g.order >= 2 and is_connected(g):
        coloring = two_coloring(g)

        if coloring is not None:
            sides = [[degrees[u] for u in g.vertices() if coloring[u] == c] for c in (0, 1)]

            if all(len(set(side)) == 1 for side in sides):
                biregular = (sides[0][0], sides[1][0], len(sides[0]), len(sides[1]))

    return DegreeProfile(degrees, biregular)


def is_k1k2_regular(g):
    """Return (k1, k2) with k1 > k2 if the graph has exactly two degrees and no edge joins equal degrees."""
    degrees = g.degrees()
    distinct = set(degrees)

    if len(distinct) != 2:
        return None

    if any(degrees[u] == degrees[v] for u, v in g.edges):
        return None

    return max(distinct), min(distinct)


def d_set(g, d, x, y, i, j):
    """Return the vertices at distance i from x and j from y."""
    d = _distances(g, d)
    dx, dy = d.row(x), d.row(y)
    return frozenset(u for u in g.vertices() if dx[u] == i and dy[u] == j)
