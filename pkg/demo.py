#!/usr/bin/python3
"""Quasi DB - Demo"""

from quasi_db.balance import classify, total_distances, w_partition
from quasi_db.constructions import (
    HGraphSpec,
    complete_bipartite,
    complete_with_pendants,
    fig8,
    g4,
    g5,
    h_graph,
    incidence_k4,
    odd_family,
    predict_odd_family
)
from quasi_db.enumeration import EnumerationScope
from quasi_db.formats import format_blocks, to_graph6
from quasi_db.verification import check_families, run_check, run_search


# Classify a few graphs for n=1
print("Classification for n=1:")

for name, g in (("K2,3", complete_bipartite(2, 3)), ("g4", g4()), ("g5", g5())):
    print(f"{name:6} {to_graph6(g):12} {classify(g, 1).verdict}")

print()

# Look at one W-partition
part = w_partition(complete_bipartite(2, 3), None, 0, 2)
print(f"W-partition of 0-2 in K2,3: {sorted(part.closer_to_u)} / {sorted(part.closer_to_v)}")
print(f"Total distances of K2,3: {total_distances(complete_bipartite(2, 3))}")
print()

# Build an H-graph over the incidence graph of K4
spec = HGraphSpec(3, incidence_k4(), 2)
g = h_graph(spec)
print(f"H(3, k4-incidence, 2): {to_graph6(g)}")
print(format_blocks(g))
print(f"Stated lambda {spec.claimed_lambda}, measured {classify(g, 1).verdict}")
print()

# Families that are quasi for larger distances
g = fig8(6, 5, 4)
print(f"Three cliques sharing edges, n=3: {classify(g, 3).verdict}")
g = odd_family(2, 4, 6, 5)
wx, wy, n = predict_odd_family(2, 4, 6, 5)
print(f"Odd family, n={n}: {classify(g, n).verdict} (closed form {wx}/{wy})")
g = complete_with_pendants(4, [0, 1])
print(f"K4 with 2 pendants, n=2: {classify(g, 2).verdict}")
print()

# Run a theorem check and a search over the connected graphs up to order 6
scope = EnumerationScope(6)
print(f"Sweeping {sum(1 for _ in scope.graphs())} connected graphs")

for check in ("bipartite-theorem", "transmission-regular", "parity"):
    findings = run_check(check, 6)
    bad = sum(1 for f in findings if f.is_counterexample)
    print(f"{check:22} {len(findings)} finding(s), {bad} counterexample(s)")

print()
print("Biregular search:")

for finding in run_search("biregular", 6):
    print(finding.to_line())

print()

# Compare every construction family against its stated lambda
print("Family mismatches:")

for finding in check_families():
    if finding.name != "confirmed":
        print(finding.to_line())
