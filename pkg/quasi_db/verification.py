"""Quasi DB - Verification Functions

Every check sweeps a scope of small graphs (or a list of construction instances) and returns a sorted
list of findings. A finding is one tab-separated line:

    <check>\t<graph6>\t<confirmed|counterexample|mismatch>\t<detail>

confirmed      - the statement holds for this graph
counterexample - the statement fails; the graph and the detail are enough to re-verify it
mismatch       - a stated formula disagrees with the exact computation while the construction itself
                 behaves as its closed form predicts

Sweeps may be spread over worker processes; workers receive graph6 strings and findings are sorted by
(check, graph6, detail) after the merge, so the job count never changes the output.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import networkx as nx

from .balance import (
    Classification,
    classify,
    d_set,
    degree_profile,
    is_k1k2_regular,
    is_transmission_regular,
    parity_check,
    total_distances,
    verdict_from_pairs
)
from .constants import (
    CORONA_MAX_ORDER,
    FINDING_CONFIRMED,
    FINDING_COUNTEREXAMPLE,
    FINDING_MISMATCH,
    FINDING_NAMES,
    TENSOR_MAX_ORDER,
    max_enumeration_order
)
from .constructions import (
    HGraphSpec,
    complete_bipartite,
    complete_with_pendants,
    corona,
    cycle,
    even_family,
    fig7,
    fig8,
    fig9,
    fig11,
    g1,
    g2,
    g3,
    g4,
    g5,
    h_graph,
    incidence_k4,
    odd_family,
    predict_even_family,
    predict_fig7,
    predict_fig8,
    predict_fig9,
    predict_g1,
    predict_g3,
    predict_odd_family,
    tensor
)
from .enumeration import EnumerationScope, enumerate_all
from .error import DisconnectedGraphError, EnvelopeError, GraphFormatError, InvalidParamsError
from .formats import parse_graph6, to_graph6
from .graph import Graph, all_pairs_distances, diameter, is_connected, odd_cycle
from .symmetry import is_edge_transitive


logger = logging.getLogger(__name__)


# Classes
# =======
class Finding(object):
    """One line of a findings report."""
    def __init__(self, check, graph6, verdict, detail=""):
        """Setup this finding."""
        if verdict not in FINDING_NAMES:
            raise InvalidParamsError(f"unknown finding verdict {verdict!r}")

        for field in (check, graph6, detail):
            if "\t" in field or "\n" in field:
                raise InvalidParamsError(f"finding field {field!r} contains a tab or newline")

        self.check = check
        self.graph6 = graph6
        self.verdict = verdict
        self.detail = detail

    def __eq__(self, other):
        """Compare two findings."""
        if not isinstance(other, Finding):
            return NotImplemented

        return self.to_line() == other.to_line()

    def __hash__(self):
        """Return the hash of this finding."""
        return hash(self.to_line())

    def __str__(self):
        """Return the string representation of this finding."""
        return f"Finding({self.to_line()!r})"

    def __repr__(self):
        """Return the string representation of this finding."""
        return str(self)

    @property
    def name(self):
        """The report spelling of the verdict."""
        return FINDING_NAMES[self.verdict]

    @property
    def is_counterexample(self):
        """True if this finding refutes the checked statement."""
        return self.verdict == FINDING_COUNTEREXAMPLE

    def sort_key(self):
        """Return the (check, graph6, detail) key reports are sorted by."""
        return self.check, self.graph6, self.detail

    def graph(self):
        """Parse the embedded graph."""
        return parse_graph6(self.graph6)

    def to_line(self):
        """Serialize to one report line (no newline)."""
        return f"{self.check}\t{self.graph6}\t{self.name}\t{self.detail}"

    @classmethod
    def from_line(cls, line, line_no=None):
        """Parse one report line."""
        parts = line.rstrip("\n").split("\t")

        if len(parts) != 4:
            raise GraphFormatError(f"expected 4 tab-separated fields, got {len(parts)}", line_no)

        check, graph6, name, detail = parts
        verdicts = {v: k for k, v in FINDING_NAMES.items()}

        if name not in verdicts:
            raise GraphFormatError(f"unknown finding verdict {name!r}", line_no)

        return cls(check, graph6, verdicts[name], detail)


class ParityDistances(object):
    """The shortest even and odd walk lengths between every pair of vertices.

    Lengths come from BFS on the bipartite double cover G x K2; math.inf means no walk of that parity.
    """
    def __init__(self, g):
        """Setup these parity distances."""
        cover = nx.tensor_product(g.to_networkx(), nx.complete_graph(2))
        self._lengths = {}

        for (u, side), lengths in nx.all_pairs_shortest_path_length(cover):
            if side == 0:
                for (v, parity), length in lengths.items():
                    self._lengths[u, v, parity] = length

    def even(self, u, v):
        """Return the length of the shortest even walk from u to v."""
        return self._lengths.get((u, v, 0), math.inf)

    def odd(self, u, v):
        """Return the length of the shortest odd walk from u to v."""
        return self._lengths.get((u, v, 1), math.inf)


# Shared Functions
# ================
def parse_finding(line, line_no=None):
    """Parse one findings line."""
    return Finding.from_line(line, line_no)


def reclassify_independently(g, n):
    """Classify from Floyd-Warshall distances, sharing nothing with the BFS path but the verdict rule."""
    dist = nx.floyd_warshall(g.to_networkx())
    pairs = []

    for u, v in combinations(g.vertices(), 2):
        if math.isinf(dist[u][v]):
            raise DisconnectedGraphError(f"graph is disconnected: no path between {u} and {v}", (u, v))

        if dist[u][v] == n:
            wu = sum(1 for x in g.vertices() if dist[u][x] < dist[v][x])
            wv = sum(1 for x in g.vertices() if dist[u][x] > dist[v][x])
            pairs.append((u, v, wu, wv, g.order - wu - wv))

    return verdict_from_pairs(n, pairs)


def parity_distances(g):
    """Return the shortest even and odd walk lengths of a graph."""
    return ParityDistances(g)


def tensor_distance(pg, ph, a, b):
    """Return the distance between (r, s) and (t, w) in G x H from the factors' parity distances.

    A walk in G x H is a pair of equal-length walks, and factors without isolated vertices can pad any
    walk by 2, so the distance is the smallest parity-wise maximum.
    """
    (r, s), (t, w) = a, b
    even = max(pg.even(r, t), ph.even(s, w))
    odd = max(pg.odd(r, t), ph.odd(s, w))
    return min(even, odd)


def _unverified(check, code, g, n, verdict):
    """Return a mismatch finding if the independent reclassification disagrees with a verdict, else None."""
    recount = reclassify_independently(g, n)

    if recount == verdict:
        return None

    logger.error("classification of %s for n=%d did not re-verify", code, n)
    return Finding(check, code, FINDING_MISMATCH,
                   f"{verdict} did not re-verify: floyd-warshall gives {recount}")


def _edge(e):
    return f"{e[0]}-{e[1]}"


def _sweep(worker, graphs, jobs=1):
    """Run a worker over graph6 codes, in this process or in a pool, and sort the merged findings."""
    codes = [to_graph6(g) for g in graphs]
    logger.info("sweeping %d graphs with %d job(s)", len(codes), jobs)

    if jobs <= 1:
        batches = [worker(code) for code in codes]

    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            chunksize = max(1, len(codes) // (4 * jobs))
            batches = list(executor.map(worker, codes, chunksize=chunksize))

    findings = [finding for batch in batches for finding in batch]
    logger.info("%d findings, %d counterexamples", len(findings),
                sum(1 for f in findings if f.is_counterexample))
    return sorted(findings, key=Finding.sort_key)


# Theorem Checks
# ==============
def _bipartite_worker(code):
    g = parse_graph6(code)
    verdict = classify(g, 1).verdict

    if not verdict.is_quasi:
        return []

    cycle_witness = odd_cycle(g)

    if cycle_witness is None:
        return [Finding("bipartite-theorem", code, FINDING_CONFIRMED, f"lambda={verdict.lam}")]

    miss = _unverified("bipartite-theorem", code, g, 1, verdict)

    if miss is not None:
        return [miss]

    witness = "-".join(str(u) for u in cycle_witness)
    return [Finding("bipartite-theorem", code, FINDING_COUNTEREXAMPLE,
                    f"lambda={verdict.lam} odd cycle {witness}")]


def check_bipartite_theorem(scope, jobs=1):
    """Every connected graph that is quasi for n=1 must be bipartite."""
    return _sweep(_bipartite_worker, scope.graphs(), jobs)


def check_edge_removal(g):
    """For every two adjacent edges, removing one of them must destroy quasi-balance with the same lambda.

    A removal that disconnects the graph counts as destroying it.
    """
    verdict = classify(g, 1).verdict

    if not verdict.is_quasi or g.min_degree < 2:
        raise InvalidParamsError("edge removal needs a quasi graph with minimum degree above 1")

    code = to_graph6(g)
    keeps = {}
    disconnecting = 0

    for e in g.edges:
        h = g.remove_edge(*e)

        if not is_connected(h):
            keeps[e] = False
            disconnecting += 1
            continue

        keeps[e] = classify(h, 1).verdict == verdict

    pairs = 0

    for e1, e2 in combinations(g.edges, 2):
        if not set(e1) & set(e2):
            continue

        pairs += 1

        if keeps[e1] and keeps[e2]:
            return Finding("edge-removal", code, FINDING_COUNTEREXAMPLE,
                           f"lambda={verdict.lam} removing {_edge(e1)} or {_edge(e2)} keeps it")

    return Finding("edge-removal", code, FINDING_CONFIRMED,
                   f"lambda={verdict.lam} adjacent-pairs={pairs} disconnecting={disconnecting}")


def _edge_removal_worker(code):
    g = parse_graph6(code)

    if g.min_degree < 2 or not classify(g, 1).verdict.is_quasi:
        return []

    return [check_edge_removal(g)]


def check_edge_removals(scope, jobs=1):
    """Run the edge-removal check on every quasi graph of the scope with minimum degree above 1."""
    return _sweep(_edge_removal_worker, scope.graphs(), jobs)


def _edge_addition_worker(code):
    g = parse_graph6(code)

    if g.min_degree < 2:
        return []

    lambdas = {}

    for u, v in combinations(g.vertices(), 2):
        if not g.has_edge(u, v):
            verdict = classify(g.add_edge(u, v), 1).verdict

            if verdict.is_quasi:
                lambdas[u, v] = verdict.lam

    pairs = 0

    for e1, e2 in combinations(sorted(lambdas), 2):
        if not set(e1) & set(e2) or lambdas[e1] != lambdas[e2]:
            continue

        pairs += 1
        both = g.add_edge(*e1).add_edge(*e2)

        if classify(both, 1).verdict == Classification.quasi(1, lambdas[e1]):
            return [Finding("edge-addition", code, FINDING_COUNTEREXAMPLE,
                            f"lambda={lambdas[e1]} adding {_edge(e1)} and {_edge(e2)} keeps it")]

    if not pairs:
        return []

    return [Finding("edge-addition", code, FINDING_CONFIRMED, f"adjacent-pairs={pairs}")]


def check_edge_addition(scope, jobs=1):
    """If G+e1 and G+e2 are quasi with one lambda for adjacent non-edges, G+e1+e2 must not be."""
    return _sweep(_edge_addition_worker, scope.graphs(), jobs)


def _components(g):
    """Return the connected components as graphs, in order of their smallest vertex."""
    nxg = g.to_networkx()
    comps = sorted(nx.connected_components(nxg), key=min)
    return [Graph.from_networkx(nxg.subgraph(sorted(comp))) for comp in comps]


def check_corona(max_order):
    """Check every corona G o H with factors up to max_order.

    Two edgeless factors give stars K_{1,|H|} (quasi with lambda |H| once |H| >= 2); every other
    connected corona must not be quasi. Disconnected coronas of non-edgeless factors are skipped.
    """
    limit = min(CORONA_MAX_ORDER, max_enumeration_order())

    if not 1 <= max_order <= limit:
        raise EnvelopeError(f"corona factors are limited to order {limit}, got {max_order}")

    factors = [f for order in range(1, max_order + 1) for f in enumerate_all(order)]
    findings = []

    for g in factors:
        for h in factors:
            c = corona(g, h)
            code = to_graph6(c)
            names = f"G={to_graph6(g)} H={to_graph6(h)}"

            if g.edge_count == 0 and h.edge_count == 0:
                bad = []

                for comp in _components(c):
                    verdict = classify(comp, 1).verdict
                    expected = (
                        Classification.quasi(1, h.order) if h.order >= 2 else Classification.balanced(1)
                    )
                    is_star = comp.order == h.order + 1 and max(comp.degrees()) == h.order

                    if not is_star or verdict != expected:
                        bad.append(f"{to_graph6(comp)}:{verdict}")

                if bad:
                    findings.append(Finding("corona", code, FINDING_COUNTEREXAMPLE,
                                            f"{names} components {' '.join(bad)}"))

                else:
                    findings.append(Finding("corona", code, FINDING_CONFIRMED,
                                            f"{names} stars={g.order} lambda={h.order}"))

            elif is_connected(c):
                verdict = classify(c, 1).verdict

                if verdict.is_quasi:
                    findings.append(Finding("corona", code, FINDING_COUNTEREXAMPLE, f"{names} {verdict}"))

                else:
                    findings.append(Finding("corona", code, FINDING_CONFIRMED, f"{names} {verdict}"))

    logger.info("corona: %d factor pairs, %d findings", len(factors) ** 2, len(findings))
    return sorted(findings, key=Finding.sort_key)


def _tensor_w_identity(g, h):
    """Compare every tensor edge's W-cardinality with |D23 of H| + |D23 of G|; return the first miss."""

    pg, ph = parity_distances(g), parity_distances(h)
    dg, dh = all_pairs_distances(g), all_pairs_distances(h)
    vertices = [(z, c) for z in g.vertices() for c in h.vertices()]

    for x, y in g.edges:
        for a, b in h.edges:
            for first, second in (((x, a), (y, b)), ((x, b), (y, a))):
                w = sum(
                    1 for z in vertices
                    if tensor_distance(pg, ph, first, z) < tensor_distance(pg, ph, second, z)
                )
                stated = len(d_set(h, dh, first[1], second[1], 2, 3)) + len(d_set(g, dg, x, y, 2, 3))

                if w != stated:
                    return f"edge {first}-{second} W={w} stated={stated}"

    return None


def check_tensor(max_order):
    """Check the tensor product statements over connected factors up to max_order.

    Quasi factors must give a disconnected tensor. Factor pairs of diameter 3 that are (r, r')-regular
    with equal degree gaps and (|G|+|H|) / (2(r1+r2)) > 1 must give no quasi component; for those
    pairs the stated W-cardinality identity is also evaluated.
    """
    if not 2 <= max_order <= TENSOR_MAX_ORDER:
        raise EnvelopeError(f"tensor factors are limited to order {TENSOR_MAX_ORDER}, got {max_order}")

    factors = list(EnumerationScope(max_order, min_order=2).graphs())
    findings = []

    for g, h in combinations_with_replacement(factors, 2):
        findings.extend(check_tensor_pair(g, h))

    logger.info("tensor: %d factors, %d findings", len(factors), len(findings))
    return sorted(findings, key=Finding.sort_key)


def check_tensor_pair(g, h):
    """Return the tensor findings of one pair of connected factors (empty if no statement applies)."""
    vg, vh = classify(g, 1).verdict, classify(h, 1).verdict
    names = f"G={to_graph6(g)} H={to_graph6(h)}"
    findings = []

    if vg.is_quasi and vh.is_quasi:
        t = tensor(g, h)
        verdict = FINDING_COUNTEREXAMPLE if is_connected(t) else FINDING_CONFIRMED
        findings.append(Finding("tensor", to_graph6(t), verdict, f"{names} quasi factors"))

    rg, rh = is_k1k2_regular(g), is_k1k2_regular(h)

    if diameter(g) != 3 or diameter(h) != 3 or rg is None or rh is None or rg[0] - rg[1] != rh[0] - rh[1]:
        return findings

    lam = Fraction(g.order + h.order, 2 * (rg[0] + rh[1]))

    if lam <= 1:
        return findings

    t = tensor(g, h)
    code = to_graph6(t)
    quasi = [str(i) for i, comp in enumerate(_components(t)) if classify(comp, 1).verdict.is_quasi]
    verdict = FINDING_COUNTEREXAMPLE if quasi else FINDING_CONFIRMED
    detail = f"{names} lambda={lam} quasi-components={','.join(quasi) or 'none'}"
    findings.append(Finding("tensor", code, verdict, detail))

    miss = _tensor_w_identity(g, h)
    verdict = FINDING_MISMATCH if miss else FINDING_CONFIRMED
    findings.append(Finding("tensor-identity", code, verdict, f"{names} {miss or 'holds'}"))
    return findings


def _transmission_worker(code):
    g = parse_graph6(code)

    if g.order < 2:
        return []

    verdict = classify(g, 1).verdict
    regular = is_transmission_regular(g)

    if verdict.is_balanced != regular:
        miss = _unverified("transmission-regular", code, g, 1, verdict)

        if miss is not None:
            return [miss]

        return [Finding("transmission-regular", code, FINDING_COUNTEREXAMPLE,
                        f"{verdict} totals={sorted(set(total_distances(g)))}")]

    if not regular:
        return []

    return [Finding("transmission-regular", code, FINDING_CONFIRMED, f"total={total_distances(g)[0]}")]


def check_transmission_regular(scope, jobs=1):
    """A connected graph is balanced for n=1 exactly when every vertex has the same total distance."""
    return _sweep(_transmission_worker, scope.graphs(), jobs)


def _parity_worker(code):
    g = parse_graph6(code)

    if not classify(g, 1).verdict.is_quasi:
        return []

    odd = parity_check(g)

    if odd:
        pairs = " ".join(_edge(pair) for pair in odd)
        return [Finding("parity", code, FINDING_COUNTEREXAMPLE, f"odd total-distance sums at {pairs}")]

    return [Finding("parity", code, FINDING_CONFIRMED, "every distance-2 pair has an even sum")]


def check_parity(scope, jobs=1):
    """In a quasi graph, D(u) + D(v) is even for every pair at distance 2."""
    return _sweep(_parity_worker, scope.graphs(), jobs)


def pendant_form(g):
    """Return (q, roots) if g is K_q with pendants on distinct roots, else None."""
    degrees = g.degrees()
    pendants = [u for u in g.vertices() if degrees[u] == 1]

    if not pendants:
        return None

    roots = [next(iter(g.neighbors(p))) for p in pendants]
    core = [u for u in g.vertices() if degrees[u] != 1]

    if len(set(roots)) != len(roots) or not set(roots) <= set(core):
        return None

    if any(not g.has_edge(u, v) for u, v in combinations(core, 2)):
        return None

    return len(core), tuple(sorted(roots))


def _pendant_worker(code):
    g = parse_graph6(code)

    if g.min_degree != 1:
        return []

    verdict = classify(g, 2).verdict

    if not verdict.is_quasi:
        return []

    form = pendant_form(g)

    if form is None:
        return [Finding("pendant-proposition", code, FINDING_COUNTEREXAMPLE,
                        f"{verdict} is not a complete graph with pendants on distinct roots")]

    q, roots = form
    return [Finding("pendant-proposition", code, FINDING_CONFIRMED, f"{verdict} q={q} roots={len(roots)}")]


def check_pendant_proposition(scope, jobs=1):
    """Quasi graphs for n=2 with a pendant vertex are exactly complete graphs with pendants on distinct roots.

    Both directions are checked: every swept graph of that kind must have the form, and every complete
    graph with pendants of the scope's orders must classify with lambda |V|-2 whenever that exceeds 1.
    """
    findings = _sweep(_pendant_worker, scope.graphs(), jobs)

    for q in range(2, scope.max_order):
        for r in range(1, min(q, scope.max_order - q) + 1):
            g = complete_with_pendants(q, range(r))
            lam = g.order - 2

            if lam <= 1:
                continue

            verdict = classify(g, 2).verdict
            expected = Classification.quasi(2, lam)
            status = FINDING_CONFIRMED if verdict == expected else FINDING_COUNTEREXAMPLE
            findings.append(Finding("pendant-construction", to_graph6(g), status,
                                    f"q={q} roots={r} {verdict} expected={expected}"))

    return sorted(findings, key=Finding.sort_key)


# Construction Checks
# ===================
def core_corpus():
    """Return the named biregular bipartite cores, each of order at most 12."""
    cores = []

    for a in range(1, 7):
        for b in range(1, 7):
            cores.append((f"K{a},{b}", complete_bipartite(a, b)))

    for q in range(4, 13, 2):
        cores.append((f"C{q}", cycle(q)))

    cores.append(("Q3", Graph.from_networkx(nx.hypercube_graph(3))))
    cores.append(("k4-incidence", incidence_k4()))
    return cores


def check_h_graph(max_pad=4):
    """Check every H(m, G, k) over the core corpus with 1 <= m, k <= max_pad.

    The classifier must agree with the closed-form edge ratios; the stated quasi condition must give
    quasi with lambda (n2+k)/(n1+m); the balanced condition must hold exactly when the graph is
    balanced. A quasi H-graph outside the stated condition is reported as a mismatch.
    """
    findings = []

    for name, core in core_corpus():
        for m in range(1, max_pad + 1):
            for k in range(1, max_pad + 1):
                try:
                    spec = HGraphSpec(m, core, k)

                except InvalidParamsError:
                    continue

                h = h_graph(spec)
                code = to_graph6(h)
                verdict = classify(h, 1).verdict
                closed = verdict_from_pairs(1, [(0, 1, a, b, 0) for a, b in spec.edge_ratios()])
                detail = (
                    f"core={name} m={m} k={k} t1={spec.t1} t2={spec.t2} n1={spec.n1} n2={spec.n2} "
                    f"{verdict}"
                )

                if verdict != closed:
                    findings.append(Finding("h-graph", code, FINDING_COUNTEREXAMPLE,
                                            f"{detail} closed-form={closed}"))

                elif spec.satisfies_balanced_condition != verdict.is_balanced:
                    findings.append(Finding("h-graph", code, FINDING_COUNTEREXAMPLE,
                                            f"{detail} balanced-condition={spec.satisfies_balanced_condition}"))

                elif spec.satisfies_quasi_condition:
                    expected = Classification.quasi(1, spec.claimed_lambda)
                    status = FINDING_CONFIRMED if verdict == expected else FINDING_COUNTEREXAMPLE
                    findings.append(Finding("h-graph", code, status, f"{detail} stated={expected}"))

                elif verdict.is_quasi:
                    findings.append(Finding("h-graph", code, FINDING_MISMATCH,
                                            f"{detail} quasi without the stated condition"))

                else:
                    findings.append(Finding("h-graph", code, FINDING_CONFIRMED, detail))

    logger.info("h-graph: %d instances", len(findings))
    return sorted(findings, key=Finding.sort_key)


def family_instances():
    """Yield (name, graph, predicted (w_x, w_y, n), stated lambda, expected diameter or None)."""
    for n in range(2, 7):
        for m in range(n + 1, 7):
            yield f"g1({m},{n})", g1(m, n), predict_g1(m, n), Fraction(2 * m, n), None
            yield f"g2({m},{n})", g2(m, n), predict_g3(m, n, 2), Fraction(m, n), None

            for d in (2, 3, 4):
                yield f"g3({m},{n},{d})", g3(m, n, d), predict_g3(m, n, d), Fraction(m, n), d

    yield "g4", g4(), predict_g3(1, 2, 4), Fraction(7, 5), 4
    yield "g5", g5(), predict_g3(2, 3, 3), Fraction(8, 7), 3

    for n, d, m in ((3, 2, 2), (5, 3, 4), (6, 4, 2)):
        yield f"fig7({n},{d},{m})", fig7(n, d, m), predict_fig7(n, d, m), Fraction(n, m), None

    for n, d, m in ((5, 8, 4), (6, 5, 3), (7, 6, 5)):
        yield f"fig8({n},{d},{m})", fig8(n, d, m), predict_fig8(n, d, m), Fraction(n, m), None

    for n, m in ((6, 5), (7, 5), (8, 6)):
        yield f"fig9({n},{m})", fig9(n, m), predict_fig9(n, m), Fraction(n, m), None

    for k in (2, 3):
        for n, m in ((6, 5), (7, 5)):
            stated = Fraction(k * n + (k - 1) * m - 4 * k, k * m + (k - 1) * n - 4 * k)
            name = f"fig10({n},{m})" if k == 2 else f"even_family({k},{n},{m})"
            yield name, even_family(k, n, m), predict_even_family(k, n, m), stated, None

    for p in (4, 5):
        for n, m in ((6, 5), (7, 5)):
            stated = Fraction(2 * p + n - 4, 2 * p + m - 4)
            yield f"fig11({p},{n},{m})", fig11(p, n, m), predict_odd_family(2, p, n, m), stated, None

    for k in (2, 3):
        for n, m in ((6, 5), (7, 5)):
            j = k - 1
            stated = Fraction(2 * j * n + m - 4 * j, 2 * j * m + n - 4 * j)
            yield f"odd_family({k},4,{n},{m})", odd_family(k, 4, n, m), predict_odd_family(k, 4, n, m), \
                stated, None


def check_families():
    """Check every construction family instance against its closed form and its stated lambda."""
    findings = []

    for name, g, (wx, wy, n), stated, expected_diameter in family_instances():
        code = to_graph6(g)
        verdict = classify(g, n).verdict
        predicted = Classification.balanced(n) if wx == wy else Classification.quasi(n, Fraction(wx, wy))
        detail = f"{name} {verdict} stated-lambda={stated}"

        if verdict != predicted:
            findings.append(Finding("families", code, FINDING_COUNTEREXAMPLE,
                                    f"{detail} predicted={predicted}"))

        elif expected_diameter is not None and diameter(g) != expected_diameter:
            findings.append(Finding("families", code, FINDING_COUNTEREXAMPLE,
                                    f"{detail} diameter={diameter(g)} expected={expected_diameter}"))

        elif verdict.lam != stated:
            findings.append(Finding("families", code, FINDING_MISMATCH, detail))

        else:
            findings.append(Finding("families", code, FINDING_CONFIRMED, detail))

    return sorted(findings, key=Finding.sort_key)


# Searches
# ========
def _conjecture_worker(code):
    g = parse_graph6(code)
    verdict = classify(g, 1).verdict

    if not verdict.is_quasi:
        return []

    degrees = sorted(set(g.degrees()))
    totals = sorted(set(total_distances(g)))
    k1k2 = is_k1k2_regular(g) is not None
    detail = (
        f"lambda={verdict.lam} degrees={','.join(map(str, degrees))} "
        f"totals={','.join(map(str, totals))} k1k2={'yes' if k1k2 else 'no'}"
    )

    if len(degrees) == 2 and len(totals) == 2:
        if k1k2:
            return [Finding("conjecture", code, FINDING_CONFIRMED, detail)]

        # Only the strengthening fails
        check = "conjecture-k1k2"

    else:
        check = "conjecture"

    miss = _unverified(check, code, g, 1, verdict)

    if miss is not None:
        return [miss]

    return [Finding(check, code, FINDING_COUNTEREXAMPLE, detail)]


def search_conjecture(scope, jobs=1):
    """Record the degree set, total-distance set and (k1,k2)-regularity of every quasi graph.

    A quasi graph without exactly two degrees and two total distances is a "conjecture" counterexample;
    one that has them but is not (k1,k2)-regular is a "conjecture-k1k2" counterexample.
    """
    return _sweep(_conjecture_worker, scope.graphs(), jobs)


def _biregular_worker(code, named=None):
    g = parse_graph6(code)
    profile = degree_profile(g)

    if profile.biregular is None or profile.biregular[0] == profile.biregular[1]:
        return []

    t1, t2, n1, n2 = profile.biregular
    verdict = classify(g, 1).verdict
    detail = f"({t1},{t2})-biregular sides={n1},{n2} {verdict}"

    if named is not None:
        detail = f"{named} {detail}"

    if verdict.is_quasi:
        return [Finding("biregular", code, FINDING_CONFIRMED, detail)]

    miss = _unverified("biregular", code, g, 1, verdict)

    if miss is not None:
        return [miss]

    return [Finding("biregular", code, FINDING_COUNTEREXAMPLE, f"{detail} not quasi")]


def search_problem_biregular(scope, jobs=1):
    """Classify every connected biregular bipartite graph with two distinct degrees.

    A graph that is not quasi answers the open problem and is reported as a counterexample. The
    incidence graph of K4 is always included.
    """
    graphs = [g for g in scope.graphs() if g.order >= 2]
    findings = _sweep(_biregular_worker, graphs, jobs)
    findings.extend(_biregular_worker(to_graph6(incidence_k4()), "k4-incidence"))
    return sorted(findings, key=Finding.sort_key)


def _edge_transitive_worker(code, named=None):
    g = parse_graph6(code)
    verdict = classify(g, 1).verdict

    if not verdict.is_quasi:
        return []

    detail = f"{named + ' ' if named else ''}lambda={verdict.lam}"

    if is_edge_transitive(g):
        return [Finding("edge-transitive", code, FINDING_CONFIRMED, f"{detail} edge-transitive")]

    miss = _unverified("edge-transitive", code, g, 1, verdict)

    if miss is not None:
        return [miss]

    return [Finding("edge-transitive", code, FINDING_COUNTEREXAMPLE, f"{detail} not edge-transitive")]


def search_problem_edge_transitive(scope, jobs=1):
    """Report every quasi graph that is not edge-transitive; g4 is always included."""
    findings = _sweep(_edge_transitive_worker, scope.graphs(), jobs)
    findings.extend(_edge_transitive_worker(to_graph6(g4()), "g4"))
    return sorted(findings, key=Finding.sort_key)


# Registry
# ========
def _scoped(check, **filters):
    """Adapt a scope-based check to the (max_order, jobs, ingest) registry signature."""
    def run(max_order, jobs=1, ingest=None):
        return check(EnumerationScope(max_order, ingest=ingest, **filters), jobs)

    run.__doc__ = check.__doc__
    return run


CHECKS = {
    "bipartite-theorem":    _scoped(check_bipartite_theorem),
    "edge-removal":         _scoped(check_edge_removals, min_degree=2),
    "edge-addition":        _scoped(check_edge_addition, min_degree=2),
    "corona":               lambda max_order, jobs=1, ingest=None: check_corona(max_order),
    "tensor":               lambda max_order, jobs=1, ingest=None: check_tensor(max_order),
    "pendant-proposition":  _scoped(check_pendant_proposition),
    "transmission-regular": _scoped(check_transmission_regular, min_order=2),
    "parity":               _scoped(check_parity),
    "h-graph":              lambda max_order, jobs=1, ingest=None: check_h_graph(),
    "families":             lambda max_order, jobs=1, ingest=None: check_families()
}

SEARCHES = {
    "conjecture":      _scoped(search_conjecture),
    "biregular":       _scoped(search_problem_biregular, bipartite=True, degree_set_size=2),
    "edge-transitive": _scoped(search_problem_edge_transitive)
}


def run_check(name, max_order, jobs=1, ingest=None):
    """Run one named check."""
    if name not in CHECKS:
        raise InvalidParamsError(f"unknown check {name!r}; expected one of {', '.join(sorted(CHECKS))}")

    logger.info("running check %s up to order %d", name, max_order)
    return CHECKS[name](max_order, jobs, ingest)


def run_search(name, max_order, jobs=1, ingest=None):
    """Run one named search."""
    if name not in SEARCHES:
        raise InvalidParamsError(f"unknown search {name!r}; expected one of {', '.join(sorted(SEARCHES))}")

    logger.info("running search %s up to order %d", name, max_order)
    return SEARCHES[name](max_order, jobs, ingest)
