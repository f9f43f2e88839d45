#!/usr/bin/env python3
"""Separator and selector walk-through.

Non-isomorphic 2-coloured graphs always disagree on the colour-preserving
count of some small test graph.  The demo separates the two derived blocks
of the case1 fixture, then builds a selector over three targets and
re-verifies its strict winner by naive recounting.
"""

from homlab import build_selector, find_pair_distinguisher, recount_verify
from homlab.fixtures import fixture_bigraph
from homlab.graphs import TwoColouredGraph, induced_subgraph

case1 = fixture_bigraph("case1")
h1 = induced_subgraph(case1, {0, 1, 2}, range(9))
h2 = induced_subgraph(case1, {0, 7, 8}, range(9))

r = find_pair_distinguisher(h1, h2)
print("pair separator:", r.j.to_text().strip().replace("\n", "; "))
print("counts:", r.counts, "winner index:", r.winner)

hex1 = induced_subgraph(case1, {0}, range(9))
sel = build_selector([hex1, h1, h2])
print("\nselector over three targets:")
print("test graph components:", len(sel.j.components()), "vertices:", sel.j.total)
print("counts:", sel.counts, "winner:", sel.winner)
print("naive recount confirms strict winner:", recount_verify(sel, [hex1, h1, h2]))

tiny = TwoColouredGraph(1, 2, [(0, 0)])
r2 = find_pair_distinguisher(TwoColouredGraph(1, 1, [(0, 0)]), tiny)
print("\nsmallest separator for edge vs edge-plus-isolated-vertex:",
      r2.j.to_text().strip(), "counts:", r2.counts)
