from __future__ import annotations

from itertools import combinations

import pytest

from symbreak import constructions as c
from symbreak.graph import girth, is_bipartite, is_connected
from symbreak.search import find_isomorphism
from symbreak.symmetry import automorphism_group, is_vertex_transitive


def test_wreath_graphs():
    assert find_isomorphism(c.wreath(4), c.complete_bipartite(4)) is not None
    assert find_isomorphism(c.wreath(3), c.named("k4_box_k2")) is None
    w10 = c.wreath(10)
    assert (w10.n, w10.m, w10.regular_degree()) == (20, 40, 4)
    with pytest.raises(c.ConstructionError):
        c.wreath(2)


@pytest.mark.parametrize("n", [3, 5, 6, 7])
def test_wreath_automorphism_order(n):
    assert automorphism_group(c.wreath(n)).order() == 2**n * 2 * n


def test_wreath_four_order():
    assert automorphism_group(c.wreath(4)).order() == 1152


def test_cycle_of_k33():
    g = c.cycle_of_k33(6)
    assert (g.n, g.regular_degree()) == (36, 4)
    g2 = c.cycle_of_k33(2)
    assert (g2.n, g2.regular_degree()) == (12, 4)
    assert is_vertex_transitive(g)


def test_cage46():
    g = c.cage46()
    assert (g.n, g.regular_degree(), girth(g)) == (26, 4, 6)
    assert is_vertex_transitive(g)
    side = list(range(13))
    assert all(not g.has_edge(a, b) for a, b in combinations(side, 2))
    assert all(len(g.common_neighbours(a, b)) == 1 for a, b in combinations(side, 2))


def test_special_graphs():
    q4 = c.hypercube(4)
    assert (q4.n, q4.regular_degree(), is_bipartite(q4), girth(q4)) == (16, 4, True, 4)
    hb = c.heawood_bipcomp()
    assert (hb.n, hb.regular_degree()) == (14, 4)
    k5k2 = c.named("k5_tensor_k2")
    assert is_connected(k5k2) and k5k2.regular_degree() == 4 and girth(k5k2) == 4
    far = [(u, v) for u, v in combinations(range(10), 2) if not k5k2.has_edge(u, v)]
    assert any(len(k5k2.common_neighbours(u, v)) == 3 for u, v in far)
    assert automorphism_group(c.gray_graph()).order() == 1296
    assert c.holt_graph().regular_degree() == 4


def test_circulants_and_cayley():
    g = c.circulant(7, [1, 2])
    assert g.regular_degree() == 4 and is_vertex_transitive(g)
    assert c.circulant(8, [1, 4]).regular_degree() == 3
    z6 = c.cyclic_group(6)
    assert c.cayley(z6, [1, 5, 3]) == c.circulant(6, [1, 3])
    with pytest.raises(c.ConstructionError):
        c.cayley(z6, [1])
    with pytest.raises(c.ConstructionError):
        c.circulant(5, [5])


def test_group_tables():
    for group in (c.dihedral_group(5), c.symmetric_group(4), c.alternating_group(5),
                  c.semidirect_cyclic(13, 3, 3), c.direct_product(c.cyclic_group(3), c.dihedral_group(3))):
        c.validate_group_table(group.table)
    assert c.alternating_group(5).order == 60
    with pytest.raises(c.ConstructionError):
        c.semidirect_cyclic(7, 2, 3)
    with pytest.raises(c.ConstructionError):
        c.validate_group_table([[0, 1], [0, 1]])


def test_family_specs():
    assert c.parse_family("wreath:5") == c.wreath(5)
    assert c.parse_family("circulant:12,1,2") == c.circulant(12, [1, 2])
    assert c.parse_family("petersen") == c.petersen()
    for bad in ("wreath", "nosuch:3", "wreath:x", "petersen:3"):
        with pytest.raises(c.ConstructionError):
            c.parse_family(bad)
    assert "wreath" in c.family_names()
