from __future__ import annotations

import pytest
from hypothesis import given

from symbreak import constructions as c
from symbreak.distinguishing import (
    BudgetExceeded,
    Colouring,
    DistinguishingError,
    brute_force_distinguishing_index,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing,
    search_distinguishing,
    unpruned_distinguishing_number,
)
from symbreak.graph import hamiltonian_path, is_connected
from symbreak.symmetry import automorphism_group
from tests.strategies import connected_graphs


def test_is_distinguishing_on_c6():
    assert is_distinguishing(c.cycle(6), [1, 1, 0, 1, 0, 0])
    verdict = is_distinguishing(c.cycle(6), [0] * 6)
    assert not verdict and verdict.witness is not None


def test_is_distinguishing_edges():
    k4 = c.complete(4)
    assert not is_distinguishing(k4, Colouring("edges", (0,) * 6, 1))
    k, col = distinguishing_index(k4)
    assert is_distinguishing(k4, col)


def test_length_checked():
    with pytest.raises(DistinguishingError):
        is_distinguishing(c.cycle(5), [0, 1])


@pytest.mark.parametrize(("graph", "d"), [
    (c.complete(5), 5), (c.petersen(), 3), (c.cycle(5), 3), (c.cycle(6), 2),
    (c.complete_bipartite(3), 4), (c.hypercube(3), 3), (c.heawood(), 2), (c.path(1), 1),
])
def test_distinguishing_numbers(graph, d):
    k, col = distinguishing_number(graph)
    assert k == d
    assert is_distinguishing(graph, col)


def test_distinguishing_indices():
    assert distinguishing_index(c.heawood())[0] == 2
    assert distinguishing_index(c.complete(4))[0] == 3
    assert brute_force_distinguishing_index(c.complete(4)) == 3
    assert distinguishing_index(c.complete_bipartite(3))[0] == 3


def test_budget():
    with pytest.raises(BudgetExceeded):
        distinguishing_number(c.hypercube(6), budget=10_000)


def test_search_distinguishing_none():
    assert search_distinguishing(automorphism_group(c.complete(5)), 4) is None


def test_disconnected_rejected():
    with pytest.raises(DistinguishingError):
        distinguishing_number(c.empty(2))


@given(connected_graphs(max_n=7))
def test_pruned_search_matches_unpruned(g):
    d, col = distinguishing_number(g)
    du, colu = unpruned_distinguishing_number(g)
    assert d == du
    assert list(col.colours) == colu
    assert is_distinguishing(g, col)


@given(connected_graphs(min_n=3, max_n=6))
def test_index_matches_brute_force(g):
    assert distinguishing_index(g)[0] == brute_force_distinguishing_index(g, k_max=g.m)


@given(connected_graphs(max_n=8))
def test_bound_by_max_degree_plus_one(g):
    d, _ = distinguishing_number(g)
    assert d <= g.max_degree() + 1


@given(connected_graphs(min_n=7, max_n=9))
def test_traceable_graphs_have_small_index(g):
    if hamiltonian_path(g) is not None and is_connected(g):
        assert distinguishing_index(g)[0] <= 2
