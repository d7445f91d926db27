"""Distinguishing colourings: verification and exact computation of D(G) and D'(G).

The exact search colours positions of a fixed vertex order (BFS from vertex 0)
and returns the lexicographically least distinguishing colouring. Two prunes
keep it sound:

* canonicity: with a stabilizer chain whose base is the vertex order, an
  element of the stabilizer of the first ``i`` positions maps position ``i``
  anywhere in its basic orbit, so a coloured orbit point with a smaller colour
  than position ``i`` gives a lexicographically smaller equivalent colouring;
* dead prefixes: an automorphism that fixes every uncoloured vertex and
  preserves the colours of the prefix survives every completion.

Colour names are interchangeable too, so colours appear in first-occurrence
order. At a full colouring the dead test is exactly the distinguishing test.
"""

from __future__ import annotations

import os
import warnings
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import permutations, product

from .graph import Graph, bfs_order, is_connected, line_graph
from .perm import Perm, PermGroup, compose, is_identity
from .search import SearchBudgetExceeded
from .search import automorphism_group as _automorphism_group
from .symmetry import automorphism_group

BudgetExceeded = SearchBudgetExceeded

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("SYMBREAK_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class DistinguishingError(ValueError):
    pass


@dataclass(frozen=True)
class Colouring:
    target: str  # "vertices" or "edges"
    colours: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.target not in ("vertices", "edges"):
            raise ValueError(f"unknown colouring target {self.target!r}")
        if any(c < 0 or c >= self.k for c in self.colours):
            raise ValueError("colour index out of range")

    @classmethod
    def of(cls, colours: Sequence[int], target: str = "vertices") -> Colouring:
        cols = tuple(colours)
        return cls(target, cols, max(cols, default=-1) + 1)


@dataclass(frozen=True)
class PartialColouring:
    colours: dict[int, int]

    @property
    def domain(self) -> list[int]:
        return sorted(self.colours)


@dataclass(frozen=True)
class Verdict:
    distinguishing: bool
    witness: Perm | None = None

    def __bool__(self) -> bool:
        return self.distinguishing


# -- verification -----------------------------------------------------------------


def subdivision_colouring(g: Graph, edge_colours: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subdivide every edge; original vertices get colour 0, edge ``i`` gets ``1 + c(i)``."""
    if len(edge_colours) != g.m:
        raise DistinguishingError("edge colouring length does not match edge count")
    edges = []
    for i, (u, v) in enumerate(g.edges):
        x = g.n + i
        edges.append((u, x))
        edges.append((v, x))
    cols = [0] * g.n + [1 + c for c in edge_colours]
    return Graph(g.n + g.m, edges), cols


def is_distinguishing(g: Graph, colouring: Colouring | Sequence[int]) -> Verdict:
    """Whether only the identity preserves ``colouring``; otherwise a witness automorphism.

    Edge colourings are checked on the subdivision graph, whose
    class-preserving automorphisms are those of ``g`` acting on vertices and
    edges together; the witness is reported on vertices of ``g``.
    """
    if isinstance(colouring, Colouring):
        target, cols = colouring.target, list(colouring.colours)
    else:
        target, cols = "vertices", list(colouring)
    if target == "vertices":
        if len(cols) != g.n:
            raise DistinguishingError("colouring length does not match vertex count")
        group = _automorphism_group(g, cols)
        if group.is_trivial():
            return Verdict(True)
        return Verdict(False, group.generators[0])
    h, hcols = subdivision_colouring(g, cols)
    group = _automorphism_group(h, hcols)
    if group.is_trivial():
        return Verdict(True)
    gen = group.generators[0]
    if g.n and all(gen[v] == v for v in range(g.n)):
        # only an isolated edge can be flipped without moving a vertex of g; report on h
        return Verdict(False, gen)
    return Verdict(False, gen[:g.n])


# -- exact search -------------------------------------------------------------------


class _Engine:
    """Pruned search for the lexicographically least distinguishing colouring."""

    def __init__(self, group: PermGroup, order: Sequence[int], budget: int):
        n = group.degree
        self.n = n
        self.order = list(order)
        if sorted(self.order) != list(range(n)):
            raise ValueError("order must list every point once")
        self.pos = [0] * n
        for i, v in enumerate(self.order):
            self.pos[v] = i
        self.budget = budget
        self.nodes = 0
        gens = group.generators
        forward = PermGroup(n, gens, self.order)
        # earlier[p] = positions i < p whose basic orbit contains position p
        self.earlier: list[list[int]] = [[] for _ in range(n)]
        for i, trans in enumerate(forward.transversals):
            bi = self.pos[forward.base[i]]
            for delta in trans:
                p = self.pos[delta]
                if p != bi:
                    self.earlier[p].append(bi)
        reverse = PermGroup(n, gens, self.order[::-1])
        self.rev_base = reverse.base
        self.rev_trans = [list(t.items()) for t in reverse.transversals]
        # first reverse level whose group may move a prefix of length p
        self.rev_level = [n - p for p in range(n + 1)]
        self.trivial_from = len(reverse.transversals)
        while self.trivial_from > 0 and len(reverse.transversals[self.trivial_from - 1]) == 1:
            self.trivial_from -= 1

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"distinguishing search exceeded {self.budget} nodes")

    def dead(self, colour_of: list[int], p: int) -> Perm | None:
        """A non-identity element fixing positions ``>= p`` and preserving colours, if any."""
        level0 = self.rev_level[p]
        if level0 >= self.trivial_from:
            return None
        base, trans = self.rev_base, self.rev_trans
        last = self.trivial_from
        found: list[Perm] = []

        def walk(level: int, acc: Perm, moved: bool) -> bool:
            self._tick()
            if level == last:
                # later base points are moved by earlier transversal elements too
                if moved and all(colour_of[acc[x]] == colour_of[x] for x in range(self.n)):
                    found.append(acc)
                    return True
                return False
            b = base[level]
            want = colour_of[b]
            for beta, u in trans[level]:
                img = acc[u[b]]
                if colour_of[img] != want:
                    continue
                nxt = compose(acc, u)
                if walk(level + 1, nxt, moved or beta != b):
                    return True
            return False

        walk(level0, tuple(range(self.n)), False)
        return found[0] if found else None

    def run(self, k: int) -> list[int] | None:
        n, order = self.n, self.order
        colour_of = [-1] * n
        by_pos = [-1] * n

        def rec(p: int, used: int) -> bool:
            self._tick()
            if p == n:
                return True
            v = order[p]
            for c in range(min(k, used + 1)):
                if any(by_pos[i] > c for i in self.earlier[p]):
                    continue
                colour_of[v] = c
                by_pos[p] = c
                if self.dead(colour_of, p + 1) is None and rec(p + 1, max(used, c + 1)):
                    return True
                colour_of[v] = -1
                by_pos[p] = -1
            return False

        if n == 0:
            return []
        return colour_of[:] if rec(0, 0) else None


def search_distinguishing(group: PermGroup, k: int, order: Sequence[int] | None = None,
                          budget: int | None = None) -> list[int] | None:
    """Lexicographically least distinguishing ``k``-colouring (by ``order`` positions) or ``None``."""
    order = list(range(group.degree)) if order is None else order
    engine = _Engine(group, order, default_budget() if budget is None else budget)
    return engine.run(k)


def _least_k(group: PermGroup, order: Sequence[int], k_max: int, budget: int | None) -> tuple[int, list[int]]:
    if k_max < 1:
        raise DistinguishingError("k_max must be at least 1")
    n = group.degree
    if group.is_trivial():
        return 1, [0] * n
    budget = default_budget() if budget is None else budget
    engine = _Engine(group, order, budget)
    for k in range(2, k_max + 1):
        cols = engine.run(k)
        if cols is not None:
            return k, cols
    raise DistinguishingError(f"no distinguishing colouring with at most {k_max} colours")


def distinguishing_number(g: Graph, k_max: int | None = None, budget: int | None = None,
                          group: PermGroup | None = None) -> tuple[int, Colouring]:
    """Least ``k`` admitting a distinguishing vertex colouring, and the least such colouring."""
    if not is_connected(g):
        raise DistinguishingError("distinguishing number needs a connected graph")
    group = group or automorphism_group(g)
    k_max = g.n if k_max is None else k_max
    k, cols = _least_k(group, bfs_order(g, 0), k_max, budget)
    return k, Colouring("vertices", tuple(cols), k)


def distinguishing_index(g: Graph, k_max: int | None = None, budget: int | None = None) -> tuple[int, Colouring]:
    """Least ``k`` admitting a distinguishing edge colouring.

    With at least five vertices this is computed on the line graph, whose
    automorphism group induces the same permutations of edges; smaller graphs
    search the induced action on edges directly.
    """
    if not is_connected(g):
        raise DistinguishingError("distinguishing index needs a connected graph")
    if g.m == 0:
        raise DistinguishingError("distinguishing index needs at least one edge")
    if g.n == 2:
        warnings.warn("K2 has a single edge; its distinguishing index is reported as 1", stacklevel=2)
        return 1, Colouring("edges", (0,), 1)
    k_max = g.m if k_max is None else k_max
    if g.n >= 5:
        lg, _ = line_graph(g)
        k, col = distinguishing_number(lg, k_max, budget)
        return k, Colouring("edges", col.colours, k)
    group = automorphism_group(g).induced_action(g.edges)
    lg, _ = line_graph(g)
    k, cols = _least_k(group, bfs_order(lg, 0), k_max, budget)
    return k, Colouring("edges", tuple(cols), k)


# -- brute-force oracles ------------------------------------------------------------


def brute_force_automorphisms(g: Graph, colouring: Sequence[int] | None = None) -> list[Perm]:
    """Every (colour-preserving) automorphism by extending partial maps vertex by vertex."""
    n = g.n
    col = list(colouring) if colouring is not None else [0] * n
    adj = g._adjsets
    image = [-1] * n
    used = [False] * n
    out: list[Perm] = []

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or col[w] != col[v] or g.degree(w) != g.degree(v):
                continue
            if all((image[u] in adj[w]) == (u in adj[v]) for u in range(v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    return out


def unpruned_distinguishing_number(g: Graph, k_max: int | None = None,
                                   order: Sequence[int] | None = None) -> tuple[int, list[int]]:
    """Reference search: every colouring in lexicographic order against the full automorphism list."""
    n = g.n
    order = bfs_order(g, 0) if order is None else list(order)
    auts = [a for a in brute_force_automorphisms(g) if not is_identity(a)]
    k_max = n if k_max is None else k_max
    for k in range(1, k_max + 1):
        for seq in product(range(k), repeat=n):
            cols = [0] * n
            for p, c in zip(order, seq):
                cols[p] = c
            if all(any(cols[a[v]] != cols[v] for v in range(n)) for a in auts):
                return k, cols
    raise DistinguishingError(f"no distinguishing colouring with at most {k_max} colours")


def brute_force_distinguishing_index(g: Graph, k_max: int = 4) -> int:
    """Reference edge-colouring search over the brute-force automorphism list."""
    auts = [a for a in brute_force_automorphisms(g) if not is_identity(a)]
    index = {e: i for i, e in enumerate(g.edges)}
    edge_perms = [[index[tuple(sorted((a[u], a[v])))] for u, v in g.edges] for a in auts]
    for k in range(1, k_max + 1):
        for cols in product(range(k), repeat=g.m):
            if all(any(cols[p[i]] != cols[i] for i in range(g.m)) for p in edge_perms):
                return k
    raise DistinguishingError(f"no distinguishing edge colouring with at most {k_max} colours")


def all_permutations_automorphisms(g: Graph) -> list[Perm]:
    """Exhaustive ``n!`` scan; only for tiny graphs."""
    edges = g._adjsets
    return [p for p in permutations(range(g.n))
            if all(p[v] in edges[p[u]] for u, v in g.edges)]
