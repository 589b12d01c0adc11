import json

import pytest

from degseq_exclusion.graph import Graph, cycle, induced_subgraph, is_isomorphic
from degseq_exclusion.sequences import precedes
from degseq_exclusion.verify import (
    CLAIMS,
    MUTANTS,
    GadgetPreconditionError,
    VerificationReport,
    build_exclusion_poset,
    gadget_contract_subdivide,
    gadget_matching_pair,
    gadget_rewire,
    run_claim,
    verify_gadgets,
    verify_lemma_half_join,
    verify_lemma_s_or_h,
    verify_prop_split,
    verify_theorem,
)


def cycle_plus(k, extra_edges, extra=1):
    """C_k on 0..k-1 plus ``extra`` vertices k, k+1, ... with the given edges."""
    return Graph.from_edges(k + extra, [(i, (i + 1) % k) for i in range(k)] + list(extra_edges))


def without(g, *vs):
    return induced_subgraph(g, [v for v in range(g.n) if v not in vs])


class TestContractSubdivide:
    def test_pentagon_example(self):
        # c1..c5 = 0..4, x = 5 adjacent only to c1; y = c1, z = c3, v = c4
        g = cycle_plus(5, [(5, 0)])
        res = gadget_contract_subdivide(g, [0, 1, 2, 3, 4], 5, 0, 2, 3)
        assert res.before.degree_sequence() == (3, 2, 2, 2, 2, 1)
        assert res.after.degree_sequence() == (3, 2, 2, 2, 2, 1)
        assert is_isomorphic(without(res.after, res.x, res.t), cycle(4))

    def test_hexagon_example(self):
        g = cycle_plus(6, [(6, 0)])
        res = gadget_contract_subdivide(g, list(range(6)), 6, 0, 2, 3)
        assert res.before.degree_sequence() == res.after.degree_sequence()
        assert is_isomorphic(without(res.after, res.x, res.t), cycle(5))

    def test_x_complete_to_cycle_has_no_z(self):
        g = cycle_plus(5, [(5, i) for i in range(5)])
        with pytest.raises(GadgetPreconditionError, match="nonadjacent to z"):
            gadget_contract_subdivide(g, [0, 1, 2, 3, 4], 5, 0, 2, 3)

    @pytest.mark.parametrize("args,message", [
        (([0, 1, 2, 3], 5, 0, 2, 3), "at least 5"),
        (([0, 2, 1, 3, 4], 5, 0, 2, 3), "cyclic order"),
        (([0, 1, 2, 3, 4], 3, 0, 2, 3), "outside the cycle"),
        (([0, 1, 2, 3, 4], 5, 6, 2, 3), "y must lie"),
        (([0, 1, 2, 3, 4], 5, 0, 6, 3), "z must lie"),
        (([0, 1, 2, 3, 4], 5, 1, 2, 3), "adjacent to y"),
        (([0, 1, 2, 3, 4], 5, 0, 2, 4), "cycle neighbour of z"),
        (([0, 1, 2, 3, 4], 5, 0, 1, 0), "differ from y"),
        (([0, 0, 2, 3, 4], 5, 0, 2, 3), "distinct"),
    ])
    def test_each_precondition_is_enforced(self, args, message):
        g = cycle_plus(5, [(5, 0)], extra=2)
        with pytest.raises(GadgetPreconditionError, match=message):
            gadget_contract_subdivide(g, *args)


class TestRewire:
    @pytest.mark.parametrize("k", [5, 6])
    def test_standard_configuration(self, k):
        x, y = k, k + 1
        g = cycle_plus(k, [(x, i) for i in range(k)] + [(y, i) for i in range(k)], extra=2)
        g2 = gadget_rewire(g, 0, 2, x, y)
        assert g2.degree_sequence() == g.degree_sequence()
        ring = [0] + list(range(2, k))
        assert is_isomorphic(induced_subgraph(g2, ring), cycle(k - 1))

    @pytest.mark.parametrize("edit,message", [
        (lambda e: e + [(0, 2)], "c1c3 must be a non-edge"),
        (lambda e: [p for p in e if p != (5, 2)], "c3x must be an edge"),
        (lambda e: e + [(5, 6)], "xy must be a non-edge"),
        (lambda e: [p for p in e if p != (6, 0)], "yc1 must be an edge"),
    ])
    def test_each_precondition_is_enforced(self, edit, message):
        edges = [(5, i) for i in range(5)] + [(6, i) for i in range(5)]
        g = cycle_plus(5, edit(edges), extra=2)
        with pytest.raises(GadgetPreconditionError, match=message):
            gadget_rewire(g, 0, 2, 5, 6)

    def test_distinct_vertices(self):
        with pytest.raises(GadgetPreconditionError, match="distinct"):
            gadget_rewire(cycle(5), 0, 2, 2, 4)


class TestMatchingPair:
    def test_examples(self):
        assert gadget_matching_pair(5) == ((2, 2, 2, 2, 2, 1, 1),) * 2
        assert gadget_matching_pair(6) == ((2, 2, 2, 2, 2, 2, 1, 1),) * 2
        with pytest.raises(ValueError):
            gadget_matching_pair(4)

    def test_random_configurations(self):
        rep = verify_gadgets(samples=200, seed=3)
        assert rep.ok and rep.checked > 400


class TestSmallRuns:
    @pytest.mark.parametrize("max_n", [0, 1, 2, 5])
    def test_prop_split(self, max_n):
        rep = verify_prop_split(max_n)
        assert rep.ok and rep.checked > 0

    def test_prop_split_mutant_fails_at_five(self):
        rep = verify_prop_split(5, mutant="broken-split-test")
        assert not rep.ok
        assert min(len(c["sequence"]) for c in rep.counterexamples if "graph6" in c) == 5

    def test_composition_cycles_small(self):
        assert verify_lemma_s_or_h(3, 5).ok

    def test_composition_cycles_empty_split(self):
        rep = verify_lemma_s_or_h(0, 5, cycle_lengths=[5])
        assert rep.ok and rep.checked > 0

    def test_composition_cycles_mutant(self):
        assert not verify_lemma_s_or_h(2, 4, mutant="wrong-composition-side").ok

    def test_composition_cycles_bounds(self):
        with pytest.raises(ValueError):
            verify_lemma_s_or_h(5, 5)

    def test_half_join(self, universe7):
        rep = verify_lemma_half_join(7, ks=(5,), universe=universe7)
        assert rep.ok and rep.checked > 0

    def test_half_join_reports_skipped_k(self, universe7):
        rep = verify_lemma_half_join(5, ks=(5, 6), universe=universe7)
        assert rep.ok and rep.skipped and "k=6" in rep.skipped[0]

    def test_half_join_mutant(self, universe7):
        rep = verify_lemma_half_join(7, ks=(5,), universe=universe7, mutant="skipped-hypothesis")
        assert not rep.ok
        # the failing sequences contain an induced square, so the hypothesis really is needed
        assert all(precedes((2, 2, 2, 2), tuple(c["sequence"])) for c in rep.counterexamples)

    def test_cycle_exclusion(self, universe7):
        assert verify_theorem(4, 7, universe=universe7).ok

    def test_cycle_exclusion_mutant_hexagon(self, universe7):
        rep = verify_theorem(4, 6, universe=universe7, mutant="dropped-theorem-class")
        assert [2] * 6 in [c["sequence"] for c in rep.counterexamples]

    def test_bounds(self):
        with pytest.raises(ValueError):
            verify_theorem(3, 5)
        with pytest.raises(ValueError):
            verify_theorem(4, 9)
        with pytest.raises(ValueError):
            verify_prop_split(9)
        with pytest.raises(ValueError):
            verify_lemma_half_join(10)
        with pytest.raises(ValueError):
            run_claim("nonsense", 5)
        with pytest.raises(ValueError):
            run_claim("prop1", 5, mutant="nonsense")


class TestReport:
    def test_record_is_reproducible(self):
        rep = VerificationReport("x", "u", checked=3)
        rep.add({"b": 2})
        rep.add({"a": 1})
        rep.finish(0.0)
        assert rep.counterexamples == [{"a": 1}, {"b": 2}]
        assert "elapsed" not in rep.to_record()
        assert json.loads(json.dumps(rep.to_record())) == rep.to_record()
        assert "[FAILED] x" in rep.to_text()

    def test_all_claims_at_five(self):
        reports = run_claim("all", 5, samples=20)
        assert [r.claim for r in reports][:len(CLAIMS)] == list(CLAIMS)
        assert all(r.ok for r in reports)

    def test_mutants_documented(self):
        assert len(MUTANTS) >= 4


class TestPoset:
    def test_three(self):
        poset = build_exclusion_poset(3)
        assert len(poset.nodes) == 8
        assert poset.precedes((), (2, 2, 2))
        assert not poset.precedes((1, 1, 0), (2, 2, 2))
        assert ((1, 1, 0), (2, 2, 2)) not in poset.covers
        assert ((1, 1), (2, 2, 2)) in poset.covers

    def test_empty_sequence_below_everything(self):
        poset = build_exclusion_poset(4)
        assert all(poset.precedes((), d) for d in poset.nodes)

    def test_agrees_with_precedes(self):
        poset = build_exclusion_poset(5)
        for d2 in poset.nodes:
            for d1 in poset.nodes:
                if len(d1) <= len(d2):
                    assert poset.precedes(d1, d2) == precedes(d1, d2), (d1, d2)

    def test_covers_are_a_reduction(self):
        poset = build_exclusion_poset(5)
        for a, b in poset.covers:
            assert poset.precedes(a, b) and a != b
            assert not any(c not in (a, b) and poset.precedes(a, c) and poset.precedes(c, b) for c in poset.nodes)

    def test_exports(self):
        poset = build_exclusion_poset(2)
        assert poset.to_csv().splitlines()[0] == "lower,upper"
        assert poset.to_dot().count("->") == len(poset.covers)

    def test_bound(self):
        with pytest.raises(ValueError):
            build_exclusion_poset(8)
