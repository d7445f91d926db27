from __future__ import annotations

import pytest

from symbreak import constructions as c
from symbreak.distinguishing import brute_force_automorphisms
from symbreak.perm import PermGroup
from symbreak.symmetry import (
    S_CAP,
    SearchCapReached,
    SymmetryError,
    automorphism_group,
    classify_two_arc,
    count_s_arcs,
    edge_types,
    is_arc_transitive,
    is_edge_transitive,
    is_isomorphic,
    is_s_arc_transitive,
    is_vertex_transitive,
    local_group,
    max_common_neighbours_at_distance_two,
    orbits,
    pointwise_stabilizer,
    straight_partner,
    transitivity_profile,
)


def test_orbits():
    assert orbits(automorphism_group(c.cycle(6))) == [list(range(6))]
    c712 = c.circulant(7, [1, 2])
    edge_orbits = orbits(automorphism_group(c712), c712, "edges")
    assert len(edge_orbits) == 2
    steps = {frozenset(min((v - u) % 7, (u - v) % 7) for u, v in orb) for orb in edge_orbits}
    assert steps == {frozenset({1}), frozenset({2})}
    assert orbits(PermGroup(3)) == [[0], [1], [2]]


def test_stabilizers():
    group = automorphism_group(c.petersen())
    assert pointwise_stabilizer(group, range(10)).is_trivial()
    assert pointwise_stabilizer(group, [0]).order() == 12
    k33 = c.complete_bipartite(3)
    stab = pointwise_stabilizer(automorphism_group(k33), [0, 1, 2])
    brute = [p for p in brute_force_automorphisms(k33) if p[:3] == (0, 1, 2)]
    assert stab.order() == len(brute) == 6


def test_transitivity_profiles():
    k5 = transitivity_profile(c.complete(5))
    assert (k5.vertex_transitive, k5.edge_transitive, k5.arc_transitive, k5.max_s) == (True, True, True, 2)
    c712 = transitivity_profile(c.circulant(7, [1, 2]))
    assert c712.vertex_transitive and not c712.edge_transitive
    pet = transitivity_profile(c.petersen())
    assert pet.max_s == 3 and pet.s_arc_regular_at == 3
    assert pet.order == 120 == count_s_arcs(c.petersen(), 3)


def test_s_cap_is_an_error():
    with pytest.raises(SearchCapReached):
        transitivity_profile(c.cycle(7))
    assert S_CAP == 32


def test_transitivity_predicates():
    holt = c.holt_graph()
    assert is_vertex_transitive(holt) and is_edge_transitive(holt) and not is_arc_transitive(holt)
    assert is_s_arc_transitive(c.heawood(), 4)
    assert not is_s_arc_transitive(c.heawood(), 5)
    assert not is_vertex_transitive(c.path(4))


def test_local_groups():
    w5 = local_group(c.wreath(5), 0)
    assert w5.iso_label == "D4"
    # blocks are the two fibres met by the neighbourhood
    assert sorted(w5.blocks) == [(2, 3), (8, 9)]
    assert local_group(c.complete(5), 0).iso_label == "S4"
    box = local_group(c.named("k4_box_k2"), 0)
    assert box.iso_label == "other"
    assert sorted(len(o) for o in box.orbits) == [1, 3]
    assert local_group(c.circulant(13, [1, 5]), 0).iso_label == "C4"


def test_edge_types():
    assert edge_types(c.wreath(5)).vertex_partition == (4,)
    assert edge_types(c.circulant(7, [1, 2])).vertex_partition == (2, 2)
    report = edge_types(c.named("k4_box_k2"))
    assert report.vertex_partition == (1, 3)
    ones = report.edges_of_type(1)
    assert sorted(v for e in ones for v in e) == list(range(8))
    assert len(report.edges_of_type(3)) == 12
    with pytest.raises(SymmetryError):
        edge_types(c.path(4))


def test_cycle_of_k33_type1_edges():
    report = edge_types(c.cycle_of_k33(4))
    ones = report.edges_of_type(1)
    touched = [v for e in ones for v in e]
    assert sorted(touched) == list(range(24))


def test_straight_and_crooked():
    w5 = c.wreath(5)
    assert classify_two_arc(w5, (0, 2, 1)) == "straight"
    assert classify_two_arc(w5, (0, 2, 4)) == "crooked"
    for a, b in w5.edges:
        kinds = [classify_two_arc(w5, (a, b, x)) for x in w5.adjacency[b] if x != a]
        assert sorted(kinds) == ["crooked", "crooked", "straight"]
    assert classify_two_arc(w5, (0, 2, straight_partner(w5, 0, 2))) == "straight"
    with pytest.raises(SymmetryError):
        classify_two_arc(c.complete(5), (0, 1, 2))


def test_isomorphism_facts():
    assert is_isomorphic(c.wreath(4), c.complete_bipartite(4)) is not None
    assert is_isomorphic(c.complete(4), c.cycle(4)) is None


def test_common_neighbours():
    assert max_common_neighbours_at_distance_two(c.named("k5_tensor_k2")) == 3
    assert max_common_neighbours_at_distance_two(c.hypercube(4)) == 2
