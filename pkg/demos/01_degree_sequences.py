"""
Degree sequences and the exclusion preorder
===========================================

A degree sequence is graphical when some simple graph realizes it.  One
sequence precedes another when some realization of the second contains a
realization of the first as an induced subgraph.
"""

from degseq_exclusion.io import format_sequence, to_graph6
from degseq_exclusion.sequences import (
    complement_sequence,
    enumerate_realizations,
    find_precedes_witness,
    is_graphical,
    realize_one,
)

# Erdős–Gallai decides graphicality without building anything
for d in [(3, 3, 3, 3), (3, 3, 1, 1), (2, 2, 2, 2, 2)]:
    print(format_sequence(d), "graphical" if is_graphical(d) else "not graphical")

# Havel–Hakimi builds one realization
g = realize_one((3, 3, 2, 2, 1, 1))
print("one realization of 3,3,2,2,1,1:", to_graph6(g), g.edges())

# every realization up to isomorphism: six 2's give the hexagon and two triangles
for h in enumerate_realizations((2,) * 6):
    print("  realization", to_graph6(h), "edges", h.edges())

# the pentagon sequence excludes the square sequence ...
print("2^4 precedes 2^5?", find_precedes_witness((2,) * 4, (2,) * 5) is not None)

# ... but seven 2's are realized by a triangle next to a square
w = find_precedes_witness((2,) * 4, (2,) * 7)
print("2^4 precedes 2^7 via", to_graph6(w.g2), "on vertices", w.embedding)

# complementing both sides preserves the order
print("complement of 2^4 is", format_sequence(complement_sequence((2,) * 4)))
