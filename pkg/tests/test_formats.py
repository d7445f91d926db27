from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from symbreak import constructions as c
from symbreak.formats import (
    FormatError,
    from_adjacency_text,
    from_graph6,
    from_sparse6,
    parse_graph,
    to_adjacency_text,
    to_graph6,
    to_sparse6,
)
from symbreak.graph import Graph
from tests.strategies import graphs


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_k5_graph6():
    g = from_graph6("D~{")
    assert (g.n, g.m) == (5, 10)
    assert to_graph6(c.complete(5)) == "D~{"


def test_single_vertex():
    assert from_graph6("@") == Graph(1)
    assert to_graph6(Graph(1)) == "@"


def test_header_accepted():
    assert from_graph6(">>graph6<<D~{") == c.complete(5)
    assert to_graph6(c.complete(5), header=True) == ">>graph6<<D~{"


@pytest.mark.parametrize("text", ["D~{;", "D~", "D~{~", "E" + chr(62) * 3, ":Fa@x^"])
def test_graph6_errors(text):
    with pytest.raises(FormatError):
        from_graph6(text)


def test_roundtrips():
    for g in (c.petersen(), c.wreath(10), c.cage46()):
        assert from_graph6(to_graph6(g)) == g
        assert from_sparse6(to_sparse6(g)) == g
        assert from_adjacency_text(to_adjacency_text(g)) == g


def test_long_form_order():
    g = c.cycle(70)
    assert to_graph6(g)[0] == "~"
    assert from_graph6(to_graph6(g)) == g


def test_parse_graph_dispatch():
    g = c.petersen()
    assert parse_graph(to_graph6(g)) == g
    assert parse_graph(to_sparse6(g)) == g
    assert parse_graph(to_adjacency_text(g), "adj") == g
    with pytest.raises(FormatError):
        from_adjacency_text("3\n0 x\n")


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ref = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert to_graph6(g) == ref
    back = nx.from_graph6_bytes(ref.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges) == list(g.edges)


@given(graphs(min_n=1, max_n=12))
def test_sparse6_parses_networkx_output(g):
    ref = nx.to_sparse6_bytes(_nx(g), header=False).decode().strip()
    assert from_sparse6(ref) == g
    assert from_sparse6(to_sparse6(g)) == g
