"""Bundled catalog of small vertex-transitive graphs used by the census.

Each entry records the dispatcher branch it is expected to exercise, so the
census can assert that every reachable branch is hit at least once.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from . import constructions as c
from .graph import Graph, cartesian_product, line_graph

# Branches no connected 4-valent vertex-transitive graph can reach: a single
# type-2 cycle would force Aut G to act as a dihedral group, whose reflections
# cannot fix two type-1 neighbours; and the triangle case only meets L(K4) and
# L(K33) when the graph is arc-transitive, so those never carry partition (2, 2).
UNREACHABLE_BRANCHES = frozenset({"type1.cycles.single", "type2.triangles.exceptional"})

BRANCHES = (
    "type1.all_type1",
    "type1.cycles.single",
    "type1.cycles.multiple",
    "type1.cubic.connected",
    "type1.cubic.two_distinguishable",
    "type1.cubic.rooted_figure",
    "type1.cubic.unique_edges",
    "type1.cubic.cycle_of_k33",
    "type1.exceptional",
    "type2.half_arc_transitive",
    "type2.single_cycle",
    "type2.cycle_induction",
    "type2.triangles",
    "type2.triangles.exceptional",
    "arc_transitive.girth3.k5",
    "arc_transitive.girth3.w3",
    "arc_transitive.girth3.exceptional",
    "arc_transitive.girth3",
    "arc_transitive.cage46",
    "arc_transitive.girth5",
    "arc_transitive.many_common.wreath",
    "arc_transitive.many_common.k5xk2",
    "arc_transitive.two_arc.q4",
    "arc_transitive.two_arc.heawood_bipcomp",
    "arc_transitive.arc_regular",
    "arc_transitive.d4.crooked",
    "arc_transitive.d4.straight",
)

REQUIRED_BRANCHES = frozenset(BRANCHES) - UNREACHABLE_BRANCHES


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], Graph]
    exceptional: str | None = None  # family name per Exceptional.name
    branch: str | None = None  # expected dispatcher branch (4-valent entries)
    expected_d: int | None = None  # only for cubic rows; 4-valent rows follow from ``exceptional``

    def graph(self) -> Graph:
        return _built(self.name)


def _cay(group: Callable[[], c.GroupTable], conn: list[int]) -> Callable[[], Graph]:
    return lambda: c.cayley(group(), conn)


def _lg(base: Callable[[], Graph]) -> Callable[[], Graph]:
    return lambda: line_graph(base())[0]


def _box(a: Callable[[], Graph], b: Callable[[], Graph]) -> Callable[[], Graph]:
    return lambda: cartesian_product(a(), b())


def _entries() -> list[CatalogEntry]:
    e = CatalogEntry
    out = [
        # exceptional graphs
        e("K5", lambda: c.complete(5), "K5", "arc_transitive.girth3.k5"),
        e("K44", lambda: c.complete_bipartite(4), "K44_W4", "arc_transitive.many_common.wreath"),
        e("K3boxK3", lambda: c.named("k3_box_k3"), "K3boxK3", "arc_transitive.girth3.exceptional"),
        e("K4boxK2", lambda: c.named("k4_box_k2"), "K4boxK2", "type1.exceptional"),
        e("K5xK2", lambda: c.named("k5_tensor_k2"), "K5xK2", "arc_transitive.many_common.k5xk2"),
        e("W3", lambda: c.wreath(3), "W3", "arc_transitive.girth3.w3"),
    ]
    out += [e(f"W{n}", (lambda n=n: c.wreath(n)), f"W{n}", "arc_transitive.many_common.wreath")
            for n in range(5, 10)]
    out += [
        # explicitly coloured and special graphs
        e("Q4", lambda: c.hypercube(4), None, "arc_transitive.two_arc.q4"),
        e("cage46", c.cage46, None, "arc_transitive.cage46"),
        e("heawood_bipcomp", c.heawood_bipcomp, None, "arc_transitive.two_arc.heawood_bipcomp"),
    ]
    out += [e(f"C{n}_K33", (lambda n=n: c.cycle_of_k33(n)), None, "type1.cubic.cycle_of_k33") for n in range(2, 6)]
    out += [
        # line graphs of cubic arc-transitive graphs
        e("L(Q3)", _lg(lambda: c.hypercube(3)), None, "arc_transitive.girth3"),
        e("L(Petersen)", _lg(c.petersen), None, "arc_transitive.girth3"),
        e("L(Heawood)", _lg(c.heawood), None, "arc_transitive.girth3"),
        e("L(Gray)", _lg(c.gray_graph), None, "type2.triangles"),
    ]
    # circulants
    out += [e(f"C{n}(1,2)", (lambda n=n: c.circulant(n, [1, 2])), None, "type2.single_cycle") for n in range(7, 16)]
    out += [
        e("C11(1,3)", lambda: c.circulant(11, [1, 3]), None, "type2.single_cycle"),
        e("C12(2,3)", lambda: c.circulant(12, [2, 3]), None, "type2.cycle_induction"),
        e("C20(2,5)", lambda: c.circulant(20, [2, 5]), None, "type2.cycle_induction"),
        e("C13(1,5)", lambda: c.circulant(13, [1, 5]), None, "arc_transitive.arc_regular"),
        e("C17(1,4)", lambda: c.circulant(17, [1, 4]), None, "arc_transitive.arc_regular"),
        e("C15(1,4)", lambda: c.circulant(15, [1, 4]), None, "arc_transitive.arc_regular"),
        e("C10(1,4)", lambda: c.circulant(10, [1, 4]), "W5", "arc_transitive.many_common.wreath"),
        # products
        e("C5boxC3", _box(lambda: c.cycle(5), lambda: c.cycle(3)), None, "type2.cycle_induction"),
        e("C5boxC4", _box(lambda: c.cycle(5), lambda: c.cycle(4)), None, "type2.cycle_induction"),
        e("C5boxC5", _box(lambda: c.cycle(5), lambda: c.cycle(5)), None, "arc_transitive.d4.crooked"),
        e("C6boxC6", _box(lambda: c.cycle(6), lambda: c.cycle(6)), None, "arc_transitive.d4.crooked"),
        e("PetersenboxK2", _box(c.petersen, lambda: c.complete(2)), None, "type1.cubic.rooted_figure"),
        e("HeawoodboxK2", _box(c.heawood, lambda: c.complete(2)), None, "type1.cubic.two_distinguishable"),
        e("T(K5)", lambda: c.truncation(c.complete(5)), None, "type1.cubic.unique_edges"),
        e("Holt", c.holt_graph, None, "type2.half_arc_transitive"),
        # Cayley graphs of dihedral groups
        e("Cay(D8;8,9,10,12)", _cay(lambda: c.dihedral_group(8), [8, 9, 10, 12]), None, "type1.all_type1"),
        e("Cay(D6;3,6,7,9)", _cay(lambda: c.dihedral_group(6), [3, 6, 7, 9]), None, "type1.cycles.multiple"),
        e("Cay(D8;1,4,7,8)", _cay(lambda: c.dihedral_group(8), [1, 4, 7, 8]), None, "type1.cycles.multiple"),
        e("Cay(D10;1,5,9,10)", _cay(lambda: c.dihedral_group(10), [1, 5, 9, 10]), None, "type1.cycles.multiple"),
        e("Cay(D8;4,8,9,11)", _cay(lambda: c.dihedral_group(8), [4, 8, 9, 11]), None, "type1.cubic.connected"),
        e("Cay(D9;9,10,12,15)", _cay(lambda: c.dihedral_group(9), [9, 10, 12, 15]), None, "type1.cubic.cycle_of_k33"),
        e("Cay(D12;12,13,15,18)", _cay(lambda: c.dihedral_group(12), [12, 13, 15, 18]), None,
          "type1.cubic.rooted_figure"),
        e("Cay(D6;6,7,8,9)", _cay(lambda: c.dihedral_group(6), [6, 7, 8, 9]), None, "type2.single_cycle"),
        e("Cay(D10;1,9,10,14)", _cay(lambda: c.dihedral_group(10), [1, 9, 10, 14]), None,
          "arc_transitive.arc_regular"),
        e("Cay(D12;12,13,15,22)", _cay(lambda: c.dihedral_group(12), [12, 13, 15, 22]), None,
          "arc_transitive.arc_regular"),
        # Cayley graphs of other non-abelian groups
        e("Cay(S4;1,3,5,11)", _cay(lambda: c.symmetric_group(4), [1, 3, 5, 11]), None, "type1.all_type1"),
        e("Cay(S4;2,6,8,10)", _cay(lambda: c.symmetric_group(4), [2, 6, 8, 10]), None, "arc_transitive.d4.straight"),
        e("Cay(Z3xD3;9,10,15,16)", _cay(lambda: c.direct_product(c.cyclic_group(3), c.dihedral_group(3)),
                                        [9, 10, 15, 16]), None, "arc_transitive.d4.crooked"),
        e("Cay(Z13:Z3;13,14,26,30)", _cay(lambda: c.semidirect_cyclic(13, 3, 3), [13, 14, 26, 30]), None,
          "type2.half_arc_transitive"),
        e("Cay(Z11:Z5;1,10,22,33)", _cay(lambda: c.semidirect_cyclic(11, 5, 3), [1, 10, 22, 33]), None,
          "arc_transitive.girth5"),
        e("Cay(A5;6,10,32,47)", _cay(lambda: c.alternating_group(5), [6, 10, 32, 47]), None, "arc_transitive.girth5"),
        # cubic rows checked against the cubic classification
        e("K4", lambda: c.complete(4), expected_d=4),
        e("K33", lambda: c.complete_bipartite(3), expected_d=4),
        e("Q3", lambda: c.hypercube(3), expected_d=3),
        e("Petersen", c.petersen, expected_d=3),
        e("Heawood", c.heawood, expected_d=2),
        e("GP(8,3)", lambda: c.generalized_petersen(8, 3), expected_d=2),
    ]
    return out


CATALOG: tuple[CatalogEntry, ...] = tuple(_entries())
_BY_NAME = {entry.name: entry for entry in CATALOG}


@lru_cache(maxsize=None)
def _built(name: str) -> Graph:
    return _BY_NAME[name].build()


def entry(name: str) -> CatalogEntry:
    return _BY_NAME[name]


def catalog_graphs(valency: int | None = None) -> list[tuple[str, Graph]]:
    """``(name, graph)`` pairs, optionally only those of the given valency."""
    out = []
    for item in CATALOG:
        g = item.graph()
        if valency is None or g.regular_degree() == valency:
            out.append((item.name, g))
    return out
