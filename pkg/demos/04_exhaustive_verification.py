"""
Exhaustive verification and mutants
====================================

The verifier replays each structural claim over every graph (or graphical
sequence) up to a size bound.  Deliberately broken variants show that the
checks would notice a mistake.
"""

from degseq_exclusion.enumeration import Universe
from degseq_exclusion.verify import MUTANTS, run_claim

universe = Universe(6)
print("graphs per size:", [len(universe.graphs(n)) for n in range(7)])

for report in run_claim("all", 6, universe=universe, samples=100):
    print(report.to_text())

print()
for mutant, what in MUTANTS.items():
    reports = run_claim("all", 6, universe=universe, mutant=mutant, samples=100)
    failing = [r for r in reports if not r.ok]
    first = failing[0].counterexamples[0] if failing else None
    print(f"{mutant} ({what}): caught by {[r.claim for r in failing]}")
    print("   first counterexample:", first)
