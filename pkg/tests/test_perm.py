from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symbreak.perm import (
    PermGroup,
    compose,
    cycle_type,
    identity,
    inverse,
    is_identity,
    is_permutation,
    orbit_partition,
    support,
)


def _closure(gens, n):
    elems = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = compose(s, a)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return elems


def test_basic_operations():
    p = (1, 2, 0, 3)
    assert compose(p, inverse(p)) == identity(4)
    assert compose((1, 0, 2), (0, 2, 1)) == (1, 2, 0)
    assert cycle_type(p) == (3, 1)
    assert support(p) == [0, 1, 2]
    assert is_identity(identity(3)) and not is_identity(p)
    assert is_permutation(p) and not is_permutation((0, 0, 1))
    assert orbit_partition(5, [(1, 0, 2, 4, 3)]) == [[0, 1], [2], [3, 4]]


def test_symmetric_group_order():
    s5 = PermGroup(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)])
    assert s5.order() == 120
    assert s5.is_transitive()
    assert s5.stabilizer(0).order() == 24
    assert s5.pointwise_stabilizer([0, 1, 2]).order() == 2
    assert s5.pointwise_stabilizer(range(5)).is_trivial()


def test_elements_limit():
    s5 = PermGroup(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)])
    assert len(set(s5.elements())) == 120
    with pytest.raises(Exception):
        list(s5.elements(limit=10))


def test_induced_action_on_pairs():
    c4 = PermGroup(4, [(1, 2, 3, 0)])
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    action = c4.induced_action(edges)
    assert action.order() == 4 and action.is_transitive()


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=3))))
def test_chain_matches_closure(data):
    n, gens = data
    group = PermGroup(n, gens)
    elems = _closure(gens, n)
    assert group.order() == len(elems)
    assert set(group.elements()) == elems
    for p in permutations(range(n)):
        assert group.contains(p) == (p in elems)
    assert group.orbits() == orbit_partition(n, gens)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=3),
    st.lists(st.integers(0, n - 1), max_size=3))))
def test_pointwise_stabilizer_matches_filter(data):
    n, gens, points = data
    elems = _closure(gens, n)
    stab = PermGroup(n, gens).pointwise_stabilizer(points)
    assert stab.order() == sum(1 for p in elems if all(p[x] == x for x in points))
