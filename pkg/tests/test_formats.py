from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from vmchain.errors import ArgumentError, GraphParseError
from vmchain.formats import from_edgelist, from_graph6, parse_graph, to_edgelist, to_graph6
from vmchain.graph import Graph
from vmchain.verify.generate import enumerate_graphs, make_rng, random_graph


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_known_encodings():
    assert to_graph6(Graph.cycle(5)) == "Dhc"
    assert to_graph6(Graph.empty(0)) == "?"
    assert to_graph6(Graph.complete(4)) == "C~"
    assert from_graph6(">>graph6<<Dhc") == Graph.cycle(5)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 62, 63, 100, 300])
def test_matches_networkx(n):
    g = random_graph(make_rng(n, 9), n)
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(back.edges()) == sorted(g.edges())


@given(graphs(0, 12))
def test_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edgelist(to_edgelist(g)) == g


def test_roundtrip_all_small():
    for n in range(7):
        for g in enumerate_graphs(n):
            assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("D", 1),  # truncated body
        ("Dh", 2),
        ("Dhc~", 3),  # trailing byte
        ("D h", 1),  # space is outside the printable range
        ("Dhd", 2),  # padding bit set
    ],
)
def test_malformed_graph6_reports_offset(text, offset):
    with pytest.raises(GraphParseError) as info:
        from_graph6(text)
    assert info.value.offset == offset
    assert f"(at byte {offset})" in str(info.value)


def test_parse_graph_offsets_count_leading_lines():
    with pytest.raises(GraphParseError) as info:
        parse_graph("\n  Dhd\n")
    assert info.value.offset == 3 + 2


def test_parse_graph_takes_first_line():
    assert parse_graph("\nDhc\nC~\n") == Graph.cycle(5)
    with pytest.raises(ArgumentError):
        parse_graph("Dhc", "dot")


def test_edgelist():
    text = "# a path\n5\n0 1\n1 2  # comment\n"
    g = from_edgelist(text)
    assert g.n == 5 and g.edges() == [(0, 1), (1, 2)]
    assert from_edgelist("0 3\n") == Graph.from_edges(4, [(0, 3)])
    assert from_edgelist("") == Graph.empty(0)


@pytest.mark.parametrize("text", ["0 x\n", "1 1\n", "0 1 2\n", "3\n4\n", "2\n0 5\n", "-1 2\n"])
def test_edgelist_errors(text):
    with pytest.raises(GraphParseError):
        from_edgelist(text)


@given(st.binary(max_size=20))
def test_fuzz_never_crashes(data):
    try:
        g = from_graph6(data)
    except GraphParseError:
        return
    assert to_graph6(g).encode() == data.removeprefix(b">>graph6<<").rstrip(b"\n")
