import pytest
from hypothesis import given
from hypothesis import strategies as st

from degseq_exclusion.graph import (
    Graph,
    canonical_form,
    complete,
    complete_bipartite,
    cycle,
    empty,
    has_induced,
    hole_lengths,
    is_isomorphic,
    matching,
    path,
)
from degseq_exclusion.split import (
    CompositionSpec,
    SplitPartition,
    compose,
    composition_degrees,
    find_split_partition,
    is_split_by_forbidden,
    is_split_graph,
    is_split_sequence,
    match_split_compose_cycle,
    split_compose_witness,
    split_partition_search,
    split_partitions_brute,
)

from test_graph import graphs


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


class TestRecognition:
    @pytest.mark.parametrize("g,expected", [
        (complete(4), True), (empty(4), True), (star(3), True), (path(4), True),
        (cycle(4), False), (cycle(5), False), (matching(2), False), (cycle(3), True),
    ])
    def test_examples(self, g, expected):
        assert is_split_graph(g) is expected
        assert is_split_by_forbidden(g) is expected
        assert (split_partition_search(g) is not None) is expected

    def test_all_methods_agree_exhaustively(self, universe7):
        for g in universe7.graphs():
            brute = split_partitions_brute(g)
            values = {is_split_graph(g), is_split_by_forbidden(g), bool(brute),
                      split_partition_search(g) is not None, find_split_partition(g) is not None,
                      is_split_sequence(g.degree_sequence())}
            assert len(values) == 1, g

    def test_partitions_are_valid(self, universe7):
        for g in universe7.graphs(6):
            for part in split_partitions_brute(g):
                assert part.is_valid(g)
            part = find_split_partition(g)
            if part is not None:
                assert part.is_valid(g)
                assert part in split_partitions_brute(g)

    def test_path3_partition(self):
        part = find_split_partition(path(3))
        assert part.is_valid(path(3))
        assert len(part.a) == 2 and len(part.b) == 1

    def test_partition_problems_named(self):
        problems = SplitPartition((0, 2), (1, 3, 4)).problems(cycle(5))
        assert any("clique" in p for p in problems)
        assert any("independent" in p for p in problems)

    def test_sequence_test_requires_graphical(self):
        with pytest.raises(ValueError):
            is_split_sequence((3, 3, 1, 1))

    def test_sequence_examples(self):
        assert is_split_sequence((3, 1, 1, 1))
        assert not is_split_sequence((2, 2, 2, 2))
        assert not is_split_sequence((1, 1, 1, 1))
        assert is_split_sequence(())


class TestComposition:
    def test_single_vertex_on_a_side(self):
        s = complete(1)
        g = compose(CompositionSpec(s, (0,), cycle(5)))
        assert g.degree_sequence() == (5, 3, 3, 3, 3, 3)
        g = compose(CompositionSpec(s, (), cycle(5)))
        assert g.degree_sequence() == (2, 2, 2, 2, 2, 0)

    def test_edge_with_c6(self):
        g = compose(CompositionSpec(path(2), (0,), cycle(6)))
        assert g.degree_sequence() == (7, 3, 3, 3, 3, 3, 3, 1)

    def test_wheel_recovered_from_its_sequence(self):
        spec = match_split_compose_cycle((5, 3, 3, 3, 3, 3), 5)
        assert spec is not None
        assert spec.s == complete(1) and spec.a == (0,)

    def test_k33_with_a_two(self):
        # S = K2 with both vertices in A
        g = compose(CompositionSpec(complete(2), (0, 1), complete_bipartite(3, 3)))
        assert g.degree_sequence() == (7, 7, 5, 5, 5, 5, 5, 5)

    def test_star_with_c6(self):
        g = compose(CompositionSpec(star(2), (0,), cycle(6)))
        assert g.degree_sequence() == (8, 3, 3, 3, 3, 3, 3, 1, 1)

    def test_empty_split_graph(self):
        g = compose(CompositionSpec(empty(0), (), cycle(6)))
        assert g == cycle(6)

    def test_invalid_partition_rejected(self):
        with pytest.raises(ValueError):
            CompositionSpec(cycle(4), (0, 1), cycle(5))
        with pytest.raises(ValueError):
            CompositionSpec(complete(2), (5,), cycle(5))

    def test_labels(self):
        g = compose(CompositionSpec(star(2), (0,), cycle(5)))
        assert g.adj[0] >> 3 == 0b11111
        assert all(g.adj[v] & 0b111 == 0b001 for v in range(3, 8))

    @given(graphs(4), st.integers(4, 7))
    def test_degrees_by_arithmetic(self, s, k):
        part = find_split_partition(s)
        if part is None:
            return
        spec = CompositionSpec(s, part.a, cycle(k))
        assert compose(spec).degree_sequence() == composition_degrees(spec)

    @given(graphs(3), st.integers(5, 7))
    def test_recovered_by_witness(self, s, k):
        part = find_split_partition(s)
        if part is None:
            return
        g = compose(CompositionSpec(s, part.a, cycle(k)))
        spec = split_compose_witness(g, k)
        assert spec is not None
        assert is_isomorphic(compose(spec), g)
        match = match_split_compose_cycle(g.degree_sequence(), k)
        assert match is not None
        assert compose(match).degree_sequence() == g.degree_sequence()

    def test_match_returns_none(self):
        assert match_split_compose_cycle((2, 2, 2, 2), 5) is None
        assert match_split_compose_cycle((3,) * 6, 5) is None


class TestHoleFreeness:
    """Composing with a split graph never creates new holes or matchings."""

    @pytest.mark.parametrize("k", [4, 5, 6, 7])
    def test_only_holes_come_from_h(self, universe7, k):
        for s in universe7.graphs(4):
            part = find_split_partition(s)
            if part is None:
                continue
            for a in {part.a, tuple(sorted(set(range(s.n)) - set(part.b)))}:
                g = compose(CompositionSpec(s, a, cycle(k)))
                assert hole_lengths(g) <= {k}
                assert not has_induced(g, cycle(4)) or k == 4

    def test_no_induced_matching_from_c5(self, universe7):
        for s in universe7.graphs(4):
            part = find_split_partition(s)
            if part is not None:
                g = compose(CompositionSpec(s, part.a, cycle(5)))
                assert not has_induced(g, matching(2))


def test_canonical_recovery_of_all_c5_compositions(universe8):
    count = 0
    for g in universe8.graphs(8):
        spec = split_compose_witness(g, 5)
        if spec is not None:
            count += 1
            assert canonical_form(compose(spec)) == g
    assert count > 0
