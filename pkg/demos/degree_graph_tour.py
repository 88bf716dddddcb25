"""A walk through the degree graphs of the small simple groups handled by the library."""

from __future__ import annotations

from cdgraph.degree_graphs import graph_from_degrees, load_fixture, psl2_graph, sporadic_graph, sz_graph
from cdgraph.graph import connectivity_report, to_canonical

# The three sporadic-like groups each have a single cut-vertex.
for name in ("M11", "J1", "PSL3_4"):
    g = sporadic_graph(name)
    rep = connectivity_report(g)
    print(f"{name}: edges={g.sorted_edges()} cut={sorted(rep.cut_vertices)}")

# The same graph can be rebuilt straight from a list of character degrees.
fx = load_fixture("M11")
print("M11 from degrees agrees:", graph_from_degrees(fx.degree_set) == sporadic_graph("M11"))

# PSL2 in even characteristic splits into three complete pieces.
print(to_canonical(psl2_graph(2, 5)))

# In odd characteristic the defining prime is isolated and 2 links both halves.
for q, (t, a) in {13: (13, 1), 25: (5, 2), 81: (3, 4)}.items():
    g = psl2_graph(t, a)
    rep = connectivity_report(g)
    print(f"PSL2({q}): components={[sorted(c) for c in rep.components]} neighbours of 2={sorted(g.neighbours(2))}")

# Suzuki groups have a cut-vertex exactly when 2^a - 1 is prime.
for a in (3, 5, 7, 9, 11):
    rep = connectivity_report(sz_graph(a))
    print(f"Sz(2^{a}): cut={sorted(rep.cut_vertices)}")
