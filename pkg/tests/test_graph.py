from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given

from symbreak import constructions as c
from symbreak.graph import (
    Graph,
    GraphError,
    bipartite_complement,
    bipartition,
    bridges,
    cartesian_product,
    components,
    contract_partition,
    delete_edges,
    delete_vertices,
    diameter,
    girth,
    hamiltonian_path,
    induced_subgraph,
    is_2_edge_connected,
    is_bipartite,
    is_connected,
    is_k_connected,
    lexicographic_product,
    line_graph,
    tensor_product,
)
from symbreak.search import find_isomorphism
from tests.strategies import connected_graphs, graphs


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_graph_normalises_edges():
    g = Graph(4, [(2, 1), (1, 2), (0, 3)])
    assert g.edges == ((0, 3), (1, 2))
    assert g.adjacency == ((3,), (2,), (1,), (0,))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_from_adjacency_requires_symmetry():
    with pytest.raises(GraphError):
        Graph.from_adjacency([[1], []])


def test_girth_values():
    assert girth(c.petersen()) == 5
    assert girth(c.wreath(3)) == 3
    assert girth(c.wreath(5)) == 4
    assert girth(c.path(4)) == math.inf


def test_connectivity_of_cycle():
    g = c.cycle(6)
    assert is_connected(g)
    assert is_k_connected(g, 2)
    assert is_2_edge_connected(g)
    assert not is_k_connected(g, 3)


def test_two_triangles_not_connected():
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_connected(g)
    assert components(g) == [[0, 1, 2], [3, 4, 5]]


def test_wreath_connectivity_bound():
    # a connected vertex-transitive graph of valency 4 is at least 3-connected
    assert is_k_connected(c.wreath(5), 3)
    assert is_k_connected(c.wreath(5), 4)


@pytest.mark.parametrize("method", ["exhaustive", "flow"])
def test_k_connectivity_methods_agree(method):
    for g, k in [(c.petersen(), 3), (c.cycle(7), 2), (c.complete(5), 4), (c.wreath(4), 4)]:
        assert is_k_connected(g, k, method)
        assert not is_k_connected(g, k + 1, method)


def test_line_graphs():
    assert find_isomorphism(line_graph(c.complete(4))[0], c.wreath(3)) is not None
    assert find_isomorphism(line_graph(c.complete_bipartite(3))[0], c.named("k3_box_k3")) is not None
    assert line_graph(c.path(3))[0] == c.path(2)


def test_products():
    assert lexicographic_product(c.cycle(5), c.empty(2)) == c.wreath(5)
    k5k2 = tensor_product(c.complete(5), c.complete(2))
    assert (k5k2.n, k5k2.regular_degree(), is_bipartite(k5k2)) == (10, 4, True)
    p = c.petersen()
    assert find_isomorphism(cartesian_product(p, c.complete(1)), p) is not None


def test_bipartite_complement():
    heawood = c.heawood()
    side = bipartition(heawood)
    comp = bipartite_complement(heawood, side)
    assert (comp.n, comp.regular_degree()) == (14, 4)
    assert bipartite_complement(comp, side) == heawood
    k44 = c.complete_bipartite(4)
    assert bipartite_complement(k44, bipartition(k44)).m == 0


def test_deletion_and_contraction():
    g, kept = delete_vertices(c.cycle(6), [0])
    assert find_isomorphism(g, c.path(5)) is not None
    assert kept == [1, 2, 3, 4, 5]
    w = c.wreath(7)
    assert find_isomorphism(contract_partition(w, [[2 * i, 2 * i + 1] for i in range(7)]), c.cycle(7)) is not None
    assert contract_partition(w, [list(range(w.n))]) == Graph(1)


def test_delete_edges_and_induced():
    g = delete_edges(c.complete(4), [(0, 1)])
    assert g.m == 5 and not g.has_edge(0, 1)
    sub, kept = induced_subgraph(c.cycle(6), [4, 0, 5, 1])
    assert kept == [0, 1, 4, 5]
    assert find_isomorphism(sub, c.path(4)) is not None


def test_hamiltonian_path_found_and_absent():
    path = hamiltonian_path(c.petersen())
    assert len(set(path)) == 10
    assert all(c.petersen().has_edge(a, b) for a, b in zip(path, path[1:]))
    assert hamiltonian_path(Graph(4, [(0, 1), (0, 2), (0, 3)])) is None


@given(graphs(max_n=9))
def test_girth_and_components_match_networkx(g):
    h = _nx(g)
    expected = nx.girth(h)
    assert girth(g) == expected
    assert sorted(map(sorted, components(g))) == sorted(sorted(cc) for cc in nx.connected_components(h))
    assert is_bipartite(g) == nx.is_bipartite(h)


@given(connected_graphs(max_n=9))
def test_bridges_and_diameter_match_networkx(g):
    h = _nx(g)
    assert sorted(bridges(g)) == sorted(tuple(sorted(e)) for e in nx.bridges(h))
    assert diameter(g) == (nx.diameter(h) if g.n else 0)


@given(connected_graphs(min_n=2, max_n=8))
def test_vertex_connectivity_matches_networkx(g):
    kappa = nx.node_connectivity(_nx(g))
    assert is_k_connected(g, kappa)
    assert not is_k_connected(g, kappa + 1)


@given(graphs(max_n=8))
def test_line_graph_edge_count(g):
    lg, edges = line_graph(g)
    assert lg.n == g.m and list(edges) == list(g.edges)
    assert lg.m == sum(d * (d - 1) // 2 for d in g.degrees())
