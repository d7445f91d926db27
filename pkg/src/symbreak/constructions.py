"""Deterministic generators for named graphs, families, circulants and Cayley graphs.

Every generator fixes its vertex numbering (documented per function) so that
colourings and certificates computed on its output are reproducible.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from itertools import combinations, product

from .graph import Graph, bipartite_complement, cartesian_product, lexicographic_product, tensor_product
from .perm import Perm, compose, identity


class ConstructionError(ValueError):
    pass


# -- basic families ---------------------------------------------------------------


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int | None = None) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    b = a if b is None else b
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError(f"cycle needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def empty(n: int) -> Graph:
    return Graph(n)


def hypercube(d: int) -> Graph:
    """Vertices are bit masks; adjacent when they differ in one bit."""
    n = 1 << d
    return Graph(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if not v & (1 << i)))


def wreath(n: int) -> Graph:
    """``C_n[2K_1]``: fibre ``i`` is ``{2i, 2i+1}``, consecutive fibres completely joined."""
    if n < 3:
        raise ConstructionError(f"wreath graph needs n >= 3, got {n}")
    return lexicographic_product(cycle(n), empty(2))


def cycle_of_k33(n: int) -> Graph:
    """``n`` copies of ``K_{3,3}`` joined in a cycle by matchings.

    Copy ``j`` has sides ``X_j = 6j..6j+2`` and ``Y_j = 6j+3..6j+5``; ``X_j[t]``
    is matched with ``Y_{j+1 mod n}[t]``.
    """
    if n < 2:
        raise ConstructionError(f"cycle of K33 needs n >= 2, got {n}")
    edges = []
    for j in range(n):
        xs = range(6 * j, 6 * j + 3)
        ys = range(6 * j + 3, 6 * j + 6)
        edges += [(x, y) for x in xs for y in ys]
        nxt = (j + 1) % n
        edges += [(6 * j + t, 6 * nxt + 3 + t) for t in range(3)]
    return Graph(6 * n, edges)


def circulant(n: int, connection: Sequence[int]) -> Graph:
    """Cayley graph of ``Z_n``; ``connection`` is closed under negation before use."""
    s = {x % n for x in connection}
    if 0 in s:
        raise ConstructionError("connection set contains 0")
    s |= {(-x) % n for x in s}
    return Graph(n, ((i, (i + x) % n) for i in range(n) for x in s))


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle ``0..n-1``, spokes ``i ~ n+i``, inner ``n+i ~ n+(i+k mod n)``."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return Graph(2 * n, edges)


def petersen() -> Graph:
    """Kneser graph ``K(5,2)``: 2-subsets of ``{0..4}`` in lexicographic order."""
    subsets = list(combinations(range(5), 2))
    return Graph(10, ((i, j) for i, j in combinations(range(10), 2) if not set(subsets[i]) & set(subsets[j])))


# -- projective planes --------------------------------------------------------------


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalised homogeneous coordinates over prime ``q`` (first non-zero entry 1), sorted."""
    pts = []
    for v in product(range(q), repeat=3):
        if any(v):
            first = next(x for x in v if x)
            if first == 1:
                pts.append(v)
    return sorted(pts)


def projective_plane_incidence(q: int) -> Graph:
    """Incidence graph of ``PG(2,q)`` for prime ``q``: points ``0..N-1``, lines ``N..2N-1``.

    Lines use the same normalised coordinates as points; point ``p`` lies on
    line ``l`` when ``p . l = 0 (mod q)``.
    """
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ConstructionError(f"only prime orders are supported, got {q}")
    pts = _projective_points(q)
    n = len(pts)
    edges = [(i, n + j) for i, p in enumerate(pts) for j, line in enumerate(pts)
             if sum(a * b for a, b in zip(p, line)) % q == 0]
    return Graph(2 * n, edges)


def cage46() -> Graph:
    """The (4,6)-cage as the incidence graph of ``PG(2,3)``."""
    return projective_plane_incidence(3)


def heawood() -> Graph:
    """The Heawood graph as the incidence graph of ``PG(2,2)``."""
    return projective_plane_incidence(2)


def heawood_bipcomp() -> Graph:
    """Bipartite complement of the Heawood graph (points vs lines)."""
    g = heawood()
    return bipartite_complement(g, [0] * 7 + [1] * 7)


def gray_graph() -> Graph:
    """Levi graph of the 27 points and 27 axis-parallel lines of the ``3x3x3`` grid.

    Points are ``0..26`` (base-3 digits ``x, y, z``); line ``27 + 9d + r`` runs
    in direction ``d`` through the remaining two coordinates ``r``.
    """
    edges = []
    for x, y, z in product(range(3), repeat=3):
        p = 9 * x + 3 * y + z
        edges.append((p, 27 + 0 + 3 * y + z))
        edges.append((p, 27 + 9 + 3 * x + z))
        edges.append((p, 27 + 18 + 3 * x + y))
    return Graph(54, edges)


def truncation(g: Graph) -> Graph:
    """Replace each vertex ``v`` of degree ``d`` by a clique on its ``d`` arcs.

    Vertex ``i`` of the result is the ``i``-th arc ``(v, w)`` in lexicographic
    order; arcs at a common tail form a clique and ``(v, w) ~ (w, v)``.
    """
    arcs = sorted((v, w) for v in range(g.n) for w in g.adjacency[v])
    idx = {a: i for i, a in enumerate(arcs)}
    edges = []
    for v in range(g.n):
        at = [idx[(v, w)] for w in g.adjacency[v]]
        edges += list(combinations(at, 2))
    edges += [(idx[(v, w)], idx[(w, v)]) for v, w in arcs if v < w]
    return Graph(len(arcs), edges)


# -- groups and Cayley graphs -------------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    """Finite group as a multiplication table; ``table[a][b] = a*b``, identity ``0``."""

    name: str
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)


def validate_group_table(table: Sequence[Sequence[int]]) -> None:
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise ConstructionError("group table must be square and non-empty")
    if list(table[0]) != list(range(n)) or [row[0] for row in table] != list(range(n)):
        raise ConstructionError("element 0 must be the identity")
    for row in table:
        if sorted(row) != list(range(n)):
            raise ConstructionError("group table rows must be permutations")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise ConstructionError(f"table is not associative at ({a}, {b}, {c})")


def group_from_permutations(name: str, generators: Sequence[Perm]) -> GroupTable:
    """Group generated by permutations; elements numbered in BFS order from the identity."""
    if not generators:
        raise ConstructionError("need at least one generator")
    deg = len(generators[0])
    e = identity(deg)
    elems = [e]
    index = {e: 0}
    i = 0
    while i < len(elems):
        for s in generators:
            x = compose(elems[i], tuple(s))
            if x not in index:
                index[x] = len(elems)
                elems.append(x)
        i += 1
    table = tuple(tuple(index[compose(a, b)] for b in elems) for a in elems)
    return GroupTable(name, table, tuple(str(p) for p in elems))


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(f"Z{n}", tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Element ``(a, b)`` is numbered ``a * |h| + b``."""
    k = h.order
    n = g.order * k
    table = tuple(tuple(g.mul(a // k, b // k) * k + h.mul(a % k, b % k) for b in range(n)) for a in range(n))
    return GroupTable(f"{g.name}x{h.name}", table)


def dihedral_group(n: int) -> GroupTable:
    """Order ``2n``: ``r^i`` is ``i`` and ``s r^i`` is ``n + i``."""
    def mul(a: int, b: int) -> int:
        ra, fa = a % n, a >= n
        rb, fb = b % n, b >= n
        # (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb + (-1)^fb ra)
        r = (rb + (-ra if fb else ra)) % n
        return r + (n if fa != fb else 0)
    return GroupTable(f"D{n}", tuple(tuple(mul(a, b) for b in range(2 * n)) for a in range(2 * n)))


def semidirect_cyclic(m: int, k: int, t: int) -> GroupTable:
    """``Z_m x| Z_k`` with the generator of ``Z_k`` acting as ``x -> t x``.

    Element ``(x, y)`` is numbered ``y * m + x``; requires ``t^k = 1 mod m``.
    """
    if pow(t, k, m) != 1 % m:
        raise ConstructionError(f"{t}^{k} is not 1 modulo {m}")
    n = m * k

    def mul(a: int, b: int) -> int:
        x1, y1 = a % m, a // m
        x2, y2 = b % m, b // m
        return ((y1 + y2) % k) * m + (x1 + pow(t, y1, m) * x2) % m

    return GroupTable(f"Z{m}:Z{k}", tuple(tuple(mul(a, b) for b in range(n)) for a in range(n)))


def symmetric_group(d: int) -> GroupTable:
    gens = [tuple([1, 0] + list(range(2, d))), tuple(list(range(1, d)) + [0])]
    return group_from_permutations(f"S{d}", gens)


def alternating_group(d: int) -> GroupTable:
    gens = []
    for i in range(d - 2):
        p = list(range(d))
        p[i], p[i + 1], p[i + 2] = p[i + 1], p[i + 2], p[i]
        gens.append(tuple(p))
    return group_from_permutations(f"A{d}", gens)


def cayley(group: GroupTable | Sequence[Sequence[int]], connection: Sequence[int]) -> Graph:
    """Cayley graph: ``g ~ g*s`` for ``s`` in the (inverse-closed) connection set."""
    if isinstance(group, GroupTable):
        table = group.table
    else:
        table = tuple(tuple(row) for row in group)
    validate_group_table(table)
    n = len(table)
    s = set(connection)
    if 0 in s:
        raise ConstructionError("connection set contains the identity")
    if any(not 0 <= x < n for x in s):
        raise ConstructionError("connection set element out of range")
    inv = [table[a].index(0) for a in range(n)]
    if any(inv[x] not in s for x in s):
        raise ConstructionError("connection set is not closed under inverses")
    return Graph(n, ((g, table[g][x]) for g in range(n) for x in s))


def holt_graph() -> Graph:
    """The 27-vertex half-arc-transitive graph: ``(x, y) ~ (4x +- 1, y + 1)`` on ``Z9 x Z3``.

    Vertex ``(x, y)`` is numbered ``3x + y``.
    """
    edges = []
    for x in range(9):
        for y in range(3):
            for d in (1, -1):
                edges.append((3 * x + y, 3 * ((4 * x + d) % 9) + (y + 1) % 3))
    return Graph(27, edges)


# -- named graphs --------------------------------------------------------------------


def _named_table() -> dict[str, Callable[[], Graph]]:
    k2 = complete(2)
    return {
        "petersen": petersen,
        "heawood": heawood,
        "heawood_bipcomp": heawood_bipcomp,
        "cage46": cage46,
        "k3_box_k3": lambda: cartesian_product(complete(3), complete(3)),
        "k4_box_k2": lambda: cartesian_product(complete(4), k2),
        "k5_tensor_k2": lambda: tensor_product(complete(5), k2),
        "gray": gray_graph,
        "holt": holt_graph,
    }


def named(name: str, *params: int) -> Graph:
    """Named graph or parametrised family (see :data:`FAMILIES`)."""
    key = name.lower()
    table = _named_table()
    if key in table:
        if params:
            raise ConstructionError(f"{name} takes no parameters")
        return table[key]()
    if key not in FAMILIES:
        raise ConstructionError(f"unknown graph family {name!r}")
    builder, arity = FAMILIES[key]
    if arity is not None and len(params) != arity:
        raise ConstructionError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


FAMILIES: dict[str, tuple] = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, None),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "hypercube": (hypercube, 1),
    "wreath": (wreath, 1),
    "cycle_of_k33": (cycle_of_k33, 1),
    "generalized_petersen": (generalized_petersen, 2),
    "circulant": (lambda n, *s: circulant(n, s), None),
}


def parse_family(spec: str) -> Graph:
    """``NAME`` or ``NAME:p1,p2,...``, e.g. ``wreath:5`` or ``circulant:12,1,2``."""
    name, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise ConstructionError(f"bad parameters in {spec!r}") from None
    return named(name, *params)


def family_names() -> list[str]:
    return sorted(set(FAMILIES) | set(_named_table()))

