"""
Which sequences exclude a square?
=================================

Every classifier answers by brute force ("does any realization contain the
target?") and separately lists the structural classes that explain the
answer.  The two always agree on the sequences shown here, and the
exhaustive verifier checks that they agree everywhere up to 8 vertices.
"""

from degseq_exclusion.classify import classify

cases = [
    ("C4", (2, 2, 2, 2, 2)),           # the pentagon
    ("C4", (2, 2, 2, 2, 2, 2)),        # hexagon or two triangles
    ("C4", (5, 3, 3, 3, 3, 3)),        # the 5-wheel
    ("C4", (2, 2, 2, 2)),              # the square itself
    ("M2", (3, 3, 3, 3, 3, 3)),        # K3,3 or the prism
    ("Cn:5", (2, 2, 2, 2, 2, 2, 2)),   # heptagon
    ("M2C4", (3, 1, 1, 1)),            # a star is split
]

for target, d in cases:
    res = classify(d, target)
    print(res.to_text())
    print("consistent:", res.consistent, "| witnesses revalidate:", not res.revalidate())
    print()
