"""Group-theoretic predicates on graphs: orbits, stabilizers, transitivity,
local groups, edge types and straight/crooked 2-arcs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph import Edge, Graph, edge_key, is_connected
from .perm import Perm, PermGroup, compose, cycle_type, identity, orbit_partition
from .search import automorphism_group as _automorphism_group
from .search import find_isomorphism

S_CAP = 32


class SymmetryError(ValueError):
    """Precondition failure of a symmetry computation."""


class SearchCapReached(RuntimeError):
    """The s-arc transitivity search hit its cap."""


@lru_cache(maxsize=512)
def automorphism_group(g: Graph) -> PermGroup:
    """``Aut(g)``; cached per graph since graphs are immutable."""
    return _automorphism_group(g)


def is_isomorphic(g: Graph, h: Graph) -> Perm | None:
    return find_isomorphism(g, h)


def orbits(group: PermGroup, g: Graph | None = None, domain: str = "vertices") -> list[list]:
    """Orbit partition on ``vertices``, ``edges`` (canonical pairs) or ``arcs`` (ordered pairs)."""
    if domain == "vertices":
        return group.orbits()
    if g is None:
        raise ValueError(f"orbits on {domain} need the graph")
    if domain == "edges":
        items = list(g.edges)
        index = {e: i for i, e in enumerate(items)}
        gens = [[index[edge_key(p[u], p[v])] for u, v in items] for p in group.generators]
    elif domain == "arcs":
        items = [(u, v) for u in range(g.n) for v in g.adjacency[u]]
        index = {a: i for i, a in enumerate(items)}
        gens = [[index[(p[u], p[v])] for u, v in items] for p in group.generators]
    else:
        raise ValueError(f"unknown domain {domain!r}")
    return [[items[i] for i in orb] for orb in orbit_partition(len(items), gens)]


def pointwise_stabilizer(group: PermGroup, points) -> PermGroup:
    return group.pointwise_stabilizer(points)


def is_vertex_transitive(g: Graph) -> bool:
    return g.n <= 1 or automorphism_group(g).is_transitive()


def is_edge_transitive(g: Graph) -> bool:
    return g.m <= 1 or len(orbits(automorphism_group(g), g, "edges")) == 1


def is_arc_transitive(g: Graph) -> bool:
    return g.m == 0 or len(orbits(automorphism_group(g), g, "arcs")) == 1


# -- s-arcs --------------------------------------------------------------------


def count_s_arcs(g: Graph, s: int) -> int:
    """Number of non-backtracking walks with ``s`` steps."""
    if s == 0:
        return g.n
    # ways[(u, v)] = number of s-arcs ending with arc u->v
    ways = {(u, v): 1 for u in range(g.n) for v in g.adjacency[u]}
    for _ in range(s - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (u, v), c in ways.items():
            for w in g.adjacency[v]:
                if w != u:
                    nxt[(v, w)] = nxt.get((v, w), 0) + c
        ways = nxt
    return sum(ways.values())


def first_s_arc(g: Graph, s: int, start: int = 0) -> list[int] | None:
    """Lexicographically least s-arc from ``start`` (least neighbour at each step)."""
    walk = [start]

    def extend() -> bool:
        if len(walk) == s + 1:
            return True
        x = walk[-1]
        for y in g.adjacency[x]:
            if len(walk) >= 2 and y == walk[-2]:
                continue
            walk.append(y)
            if extend():
                return True
            walk.pop()
        return False

    return walk if extend() else None


def is_s_arc_transitive(g: Graph, s: int, group: PermGroup | None = None) -> bool:
    group = group or automorphism_group(g)
    arc = first_s_arc(g, s)
    if arc is None:
        return True
    stab = group.pointwise_stabilizer(arc)
    return group.order() // stab.order() == count_s_arcs(g, s)


@dataclass(frozen=True)
class TransitivityProfile:
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    max_s: int
    s_arc_regular_at: int | None
    order: int


def transitivity_profile(g: Graph) -> TransitivityProfile:
    """Transitivity levels of ``Aut(g)``.

    ``max_s`` is the largest ``s`` with a transitive action on s-arcs
    (``0`` = vertex-transitive only, ``-1`` = not vertex-transitive).
    """
    if not is_connected(g):
        raise SymmetryError("transitivity profile needs a connected graph")
    group = automorphism_group(g)
    order = group.order()
    vt = group.is_transitive()
    et = len(orbits(group, g, "edges")) <= 1
    at = len(orbits(group, g, "arcs")) <= 1
    regular_at = None
    if not vt:
        return TransitivityProfile(False, et, at, -1, None, order)
    max_s = 0
    if order == g.n:
        regular_at = 0
    s = 1
    while True:
        if s > S_CAP:
            raise SearchCapReached(f"graph is {S_CAP}-arc-transitive; s-arc search capped")
        arc = first_s_arc(g, s)
        if arc is None:
            break
        stab = group.pointwise_stabilizer(arc)
        count = count_s_arcs(g, s)
        if order // stab.order() != count:
            break
        max_s = s
        if stab.order() == 1 and regular_at is None:
            regular_at = s
        s += 1
    return TransitivityProfile(vt, et, at, max_s, regular_at, order)


# -- local groups ----------------------------------------------------------------

# transitive subgroups of S4 by order; order 4 is split into C4/V4 by cycle type
_TRANSITIVE_S4 = {4: None, 8: "D4", 12: "A4", 24: "S4"}


def _closure(gens: list[Perm], k: int) -> set[Perm]:
    elems = {identity(k)}
    frontier = [identity(k)]
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


def _label_group(elems: set[Perm], k: int) -> str:
    order = len(elems)
    if order == 1:
        return "trivial"
    if k != 4:
        return "other"
    transitive = len(orbit_partition(4, list(elems))) == 1
    if transitive:
        if order == 4:
            types = Counter(cycle_type(p) for p in elems)
            return "C4" if types[(4,)] else "V4"
        return _TRANSITIVE_S4.get(order) or "other"
    if order == 2:
        return "C2"
    if order == 4 and all(cycle_type(p) in ((1, 1, 1, 1), (2, 2), (2, 1, 1)) for p in elems):
        return "C2xC2"
    return "other"


@dataclass(frozen=True)
class LocalGroupInfo:
    vertex: int
    neighbourhood: tuple[int, ...]
    group: PermGroup
    iso_label: str
    orbits: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, int], tuple[int, int]] | None = None


def _block_systems(elems: set[Perm]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    found = []
    for pair in ((0, 1), (0, 2), (0, 3)):
        a = pair
        b = tuple(x for x in range(4) if x not in a)
        blocks = {frozenset(a), frozenset(b)}
        if all({frozenset(p[x] for x in blk) for blk in blocks} == blocks for p in elems):
            found.append((a, b))
    return found


@lru_cache(maxsize=4096)
def local_group(g: Graph, v: int) -> LocalGroupInfo:
    """Action of the stabilizer of ``v`` on ``N(v)``.

    The group acts on positions ``0..deg-1`` of the sorted neighbourhood; block
    pairs in :attr:`LocalGroupInfo.blocks` are reported as vertex ids.
    """
    nbhd = g.adjacency[v]
    k = len(nbhd)
    pos = {w: i for i, w in enumerate(nbhd)}
    stab = automorphism_group(g).stabilizer(v)
    gens = [tuple(pos[p[w]] for w in nbhd) for p in stab.generators]
    gens = [p for p in gens if p != identity(k)]
    elems = _closure(gens, k)
    label = _label_group(elems, k)
    orbs = tuple(tuple(nbhd[i] for i in o) for o in orbit_partition(k, gens))
    blocks = None
    if k == 4 and label == "D4":
        systems = _block_systems(elems)
        if len(systems) != 1:
            raise AssertionError("D4 must have a unique 2+2 block system")
        a, b = systems[0]
        blocks = (tuple(nbhd[i] for i in a), tuple(nbhd[i] for i in b))
    return LocalGroupInfo(v, nbhd, PermGroup(k, gens), label, orbs, blocks)


# -- edge types --------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeTypeReport:
    type_of_edge: dict[Edge, int] = field(hash=False)
    vertex_partition: tuple[int, ...]

    def edges_of_type(self, t: int) -> list[Edge]:
        return [e for e, x in sorted(self.type_of_edge.items()) if x == t]

    def edges_with_type_at_least(self, t: int) -> list[Edge]:
        return [e for e, x in sorted(self.type_of_edge.items()) if x >= t]


def _arc_types(g: Graph, v: int) -> dict[int, int]:
    """Orbit size under ``A_v`` of each neighbour of ``v``."""
    info = local_group(g, v)
    return {w: len(orb) for orb in info.orbits for w in orb}


@lru_cache(maxsize=512)
def edge_types(g: Graph) -> EdgeTypeReport:
    """Edge types of a vertex-transitive graph, checked from both endpoints."""
    if not is_vertex_transitive(g):
        raise SymmetryError("edge types need a vertex-transitive graph")
    at = [_arc_types(g, v) for v in range(g.n)]
    types = {}
    for u, v in g.edges:
        if at[u][v] != at[v][u]:
            raise AssertionError(f"edge type of {(u, v)} differs between endpoints")
        types[(u, v)] = at[u][v]
    partitions = {tuple(sorted(_orbit_sizes(at[v]))) for v in range(g.n)}
    if len(partitions) != 1:
        raise AssertionError("vertex partitions differ on a vertex-transitive graph")
    return EdgeTypeReport(types, partitions.pop())


def _orbit_sizes(arc_types: dict[int, int]) -> list[int]:
    """Orbit sizes as a partition: a type-t neighbour belongs to an orbit of size t."""
    counts = Counter(arc_types.values())
    out = []
    for t, c in counts.items():
        out.extend([t] * (c // t))
    return out


# -- straight and crooked 2-arcs ----------------------------------------------------


def classify_two_arc(g: Graph, arc: tuple[int, int, int]) -> str:
    """``"straight"`` if the ends of the 2-arc form a block of the local D4 at its midpoint."""
    a, b, c = arc
    if not (g.has_edge(a, b) and g.has_edge(b, c)) or a == c:
        raise SymmetryError(f"{arc} is not a 2-arc")
    info = local_group(g, b)
    if info.iso_label != "D4":
        raise SymmetryError(f"local group at {b} is {info.iso_label}, not D4")
    pair = {a, c}
    return "straight" if any(set(blk) == pair for blk in info.blocks) else "crooked"


def straight_partner(g: Graph, a: int, b: int) -> int:
    """The unique ``c`` with ``(a, b, c)`` straight."""
    info = local_group(g, b)
    if info.iso_label != "D4":
        raise SymmetryError(f"local group at {b} is {info.iso_label}, not D4")
    for blk in info.blocks:
        if a in blk:
            return blk[0] if blk[1] == a else blk[1]
    raise SymmetryError(f"{a} is not a neighbour of {b}")


def max_common_neighbours_at_distance_two(g: Graph) -> int:
    best = 0
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            best = max(best, len(g.common_neighbours(u, v)))
    return best
