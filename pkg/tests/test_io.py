import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from degseq_exclusion.graph import Graph, cycle, empty
from degseq_exclusion.io import (
    format_sequence,
    from_graph6,
    graph_to_dot,
    parse_sequence,
    poset_to_dot,
    read_graph6,
    to_graph6,
    write_graph6,
)

from test_graph import graphs


def _nx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(12))
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert to_graph6(g) == expected


@given(graphs(12))
def test_graph6_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_known_strings():
    assert to_graph6(empty(0)) == "?"
    assert to_graph6(cycle(5)) == "Dhc"
    assert from_graph6(">>graph6<<Dhc") == cycle(5)


@pytest.mark.parametrize("bad", ["", "D", "Dh", "D~~", "Dh\x7f"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)


def test_graph6_rejects_nonzero_padding():
    # n=2 has one data bit; set a padding bit too
    with pytest.raises(ValueError):
        from_graph6(chr(2 + 63) + chr(0b110000 + 63))


def test_graph6_file_roundtrip(tmp_path):
    gs = [cycle(4), empty(3), cycle(7)]
    path = tmp_path / "gs.g6"
    assert write_graph6(gs, path) == 3
    assert read_graph6(path) == gs


@pytest.mark.parametrize("text,expected", [("2,2,2", (2, 2, 2)), ("1,2,2", (2, 2, 1)),
                                           (" 3, 1 ,2 ", (3, 2, 1)), ("", ()), ("()", ())])
def test_parse_sequence(text, expected):
    assert parse_sequence(text) == expected


@pytest.mark.parametrize("bad", ["2,-1", "2,x", "2,,2"])
def test_parse_sequence_rejects(bad):
    with pytest.raises(ValueError):
        parse_sequence(bad)


def test_format_sequence():
    assert format_sequence((3, 2, 2, 1)) == "3,2,2,1"


def test_dot_output():
    assert graph_to_dot(cycle(3)).count("--") == 3
    assert poset_to_dot([], []) == "digraph P {\n}\n"
    one = poset_to_dot(["2,2,2"], [])
    assert '"2,2,2";' in one and "->" not in one


def test_chain_poset_dot_has_two_edges():
    from degseq_exclusion.verify import build_exclusion_poset

    # (), (0,), (0,0) form a chain; reduction keeps only the two cover edges
    poset = build_exclusion_poset(2)
    chain = {(), (0,), (0, 0)}
    covers = [(a, b) for a, b in poset.covers if a in chain and b in chain]
    assert covers == [((), (0,)), ((0,), (0, 0))]
    dot = poset_to_dot(["()", "0", "0,0"], [(format_sequence(a) or "()", format_sequence(b)) for a, b in covers])
    assert dot.count("->") == 2
