"""
The exclusion order as a picture
================================

All graphical sequences on at most 4 vertices, ordered by the preorder,
reduced to cover relations and written as DOT.  Render with
``dot -Tsvg poset4.dot > poset4.svg``.
"""

import sys

from degseq_exclusion.verify import build_exclusion_poset

poset = build_exclusion_poset(4)
print(len(poset.nodes), "sequences,", len(poset.covers), "cover relations")

# sequences with the most immediate predecessors
below = {d: sum(1 for a, b in poset.covers if b == d) for d in poset.nodes}
for d in sorted(poset.nodes, key=lambda d: -below[d])[:5]:
    print(d, "covers", below[d], "sequences")

out = sys.argv[1] if len(sys.argv) > 1 else "poset4.dot"
with open(out, "w") as fh:
    fh.write(poset.to_dot())
print("wrote", out)
