from __future__ import annotations

import networkx as nx
import pytest
from conftest import trees
from hypothesis import given

from rdlab.graph import Graph, path
from rdlab.io import (
    ParseError,
    format_assignment,
    format_edgelist,
    format_edgelist_line,
    from_graph6,
    parse_assignment,
    parse_edgelist,
    parse_graph,
    to_graph6,
)


def test_edgelist_round_trip():
    g = path(5)
    assert parse_edgelist(format_edgelist(g)).edges == g.edges
    assert parse_edgelist(format_edgelist_line(g)).edges == g.edges


@pytest.mark.parametrize("text", ["", "3", "3 2\n0 1", "3 1\n0 x", "2 1\n0 7", "2 2\n0 1\n0 1"])
def test_edgelist_rejects_garbage(text):
    with pytest.raises(ParseError):
        parse_edgelist(text)


def test_graph6_known_values():
    assert to_graph6(path(4)) == nx.to_graph6_bytes(nx.path_graph(4), header=False).decode().strip()
    assert from_graph6(">>graph6<<Ch") == from_graph6("Ch")


@given(trees(max_n=70))
def test_graph6_matches_networkx(t):
    ours = to_graph6(t)
    g = nx.empty_graph(t.n)
    g.add_edges_from(t.edges)
    ref = nx.to_graph6_bytes(g, nodes=range(t.n), header=False)
    assert ours == ref.decode().strip()
    assert from_graph6(ours) == Graph(t.n, t.edges)


def test_graph6_rejects_bad_bytes():
    with pytest.raises(ParseError):
        from_graph6("C\x01")
    with pytest.raises(ParseError):
        parse_graph("C", "graph6")


def test_assignment_round_trip():
    assert parse_assignment(format_assignment((2, 0, 0, 2))) == (2, 0, 0, 2)
    with pytest.raises(ParseError):
        parse_assignment("3\n0 1")
    with pytest.raises(ParseError):
        parse_assignment("2\n0 3")
