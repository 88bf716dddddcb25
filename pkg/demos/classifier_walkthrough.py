"""Feed a few group descriptors to the classifier and read the verdicts."""

from __future__ import annotations

from collections import Counter

from cdgraph.classifier import classify, descriptor_sweep, format_verdict, parse_descriptor

# A PSL2(11) section with p = 2 gives a disconnected graph with a cut-vertex.
print(format_verdict(classify(parse_descriptor("socle = PSL2\nt = 11\na = 1\np = 2\n"))))

# PSL2(7) is rejected: 7 is a Mersenne prime, and the violations say so.
print(format_verdict(classify(parse_descriptor("socle = PSL2\nt = 7\na = 1\np = 2\n"))))

# Sz(8) with p = 7 lands in a connected clause.
print(format_verdict(classify(parse_descriptor("socle = Sz\na = 3\nquotient_vertices = {7}\np = 7\n"))))

# Tally outcomes over a small sweep.
tally = Counter(classify(d).outcome for d in descriptor_sweep(max_q=64))
for outcome, n in sorted(tally.items()):
    print(f"{outcome}: {n}")
