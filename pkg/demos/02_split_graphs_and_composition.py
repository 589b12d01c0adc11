"""
Split graphs and composition
============================

A split graph has a clique A and an independent set B covering its vertices.
Composing a split graph S with any graph H joins every vertex of A to every
vertex of H and nothing else.
"""

from degseq_exclusion.graph import complete, cycle, path
from degseq_exclusion.io import to_graph6
from degseq_exclusion.split import (
    CompositionSpec,
    compose,
    find_split_partition,
    is_split_by_forbidden,
    is_split_graph,
    is_split_sequence,
    match_split_compose_cycle,
)

# three independent ways to recognise split graphs
for name, g in [("P4", path(4)), ("C4", cycle(4)), ("C5", cycle(5)), ("K4", complete(4))]:
    print(f"{name}: threshold={is_split_graph(g)} forbidden={is_split_by_forbidden(g)} "
          f"sequence={is_split_sequence(g.degree_sequence())} partition={find_split_partition(g)}")

# K1 with its vertex in A, composed with C5, is the 5-wheel
wheel = compose(CompositionSpec(complete(1), (0,), cycle(5)))
print("wheel:", to_graph6(wheel), wheel.degree_sequence())

# an edge with one end in A, composed with C6
g = compose(CompositionSpec(path(2), (0,), cycle(6)))
print("edge o C6:", g.degree_sequence())

# and back: recover a composition from the degree sequence alone
spec = match_split_compose_cycle((5, 3, 3, 3, 3, 3), 5)
print("recovered S =", to_graph6(spec.s), "A =", spec.a, "H =", to_graph6(spec.h))
