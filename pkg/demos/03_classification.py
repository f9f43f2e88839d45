#!/usr/bin/env python3
"""Classification walk-through.

Runs the decision tree on the bundled 2-coloured fixtures at several
decoration bounds and prints the resulting stages with their witnesses.
The case3 fixture shows why the bound matters: the single-edge decoration
leaves the extremal pair dominant, but a 3-vertex path decoration already
witnesses strict domination by an inner biclique.
"""

from homlab import classify, reduce_col_to_fixcol
from homlab.fixtures import fixture_bigraph, fixture_graph

for name in ("p4", "case1", "coexistence", "case3"):
    h = fixture_bigraph(name)
    for bound in (1, 2, 3):
        rep = classify(h, bound=bound)
        extra = ""
        if "gamma_graph" in rep.witnesses:
            extra = " witness " + rep.witnesses["gamma_graph"].strip().replace("\n", "; ")
        if "exponent" in rep.witnesses:
            extra = " exponent " + rep.witnesses["exponent"]
        print(f"{name:<12} bound={bound}: {rep.stage}{extra}")
    print()

print("== plain-graph reduction targets ==")
for name in ("h_is", "triangle", "toy"):
    red = reduce_col_to_fixcol(fixture_graph(name))
    print(
        f"{name:<9} -> {red.class_count} class(es), winner multiplicity "
        f"{red.lambda_star_size}, descends to a "
        f"{red.hprime.lsize}+{red.hprime.rsize} target"
    )
