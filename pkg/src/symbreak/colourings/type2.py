"""Distinguishing 2-colourings when every edge has type 2 (edge-type partition (2, 2))."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..distinguishing import PartialColouring
from ..graph import Graph
from ..perm import PermGroup
from ..search import automorphism_group as coloured_automorphism_group
from ..symmetry import (
    S_CAP,
    SearchCapReached,
    automorphism_group,
    edge_types,
    is_arc_transitive,
    is_edge_transitive,
    is_vertex_transitive,
    orbits,
)
from .common import (
    BLACK,
    WHITE,
    ConstructionTrace,
    InvariantViolation,
    Outcome,
    PreconditionError,
    branch,
    verified,
)
from .linegraph import colour_line_graph_of_cubic


class WreathDigraphError(InvariantViolation):
    """The oriented graph is a directed wreath graph, so the undirected graph is arc-transitive."""


def _check_type2(g: Graph) -> None:
    if g.regular_degree() != 4:
        raise PreconditionError("valency", "graph is not 4-regular")
    if not is_vertex_transitive(g):
        raise PreconditionError("vertex_transitive", "graph is not vertex-transitive")
    part = edge_types(g).vertex_partition
    if part != (2, 2):
        raise PreconditionError("type2", f"edge-type partition is {part}, not (2, 2)")


# -- half-arc-transitive case -------------------------------------------------------------


def digraph_automorphism_group(n: int, arcs: Sequence[tuple[int, int]]) -> PermGroup:
    """Automorphisms of a digraph, via its doubly subdivided arcs coloured tail/head."""
    edges = []
    for i, (u, w) in enumerate(arcs):
        a, b = n + 2 * i, n + 2 * i + 1
        edges += [(u, a), (a, b), (b, w)]
    sub = Graph(n + 2 * len(arcs), edges)
    cols = [0] * n + [1, 2] * len(arcs)
    group = coloured_automorphism_group(sub, cols)
    return PermGroup(n, [p[:n] for p in group.generators])


def _is_directed_wreath(out: list[list[int]], inn: list[list[int]]) -> bool:
    """Whether out-neighbourhoods of ``x`` equal in-neighbourhoods of every out-out-neighbour of ``x``."""
    for x in range(len(out)):
        for y in out[x]:
            for z in out[y]:
                if sorted(out[x]) != sorted(inn[z]):
                    return False
    return True


@dataclass(frozen=True)
class DirectedArcColouring:
    s: int
    arc: tuple[int, ...]
    colouring: tuple[int, ...]


def colour_directed_s_arc(n: int, arcs: Sequence[tuple[int, int]], group: PermGroup) -> DirectedArcColouring:
    """Black directed ``s``-arc for a digraph whose group is regular on directed ``s``-arcs.

    Every in- and out-degree must be 2. Raises :class:`WreathDigraphError`
    when the chosen arc closes up (or revisits a vertex) and the digraph is a
    directed wreath graph.
    """
    out: list[list[int]] = [[] for _ in range(n)]
    inn: list[list[int]] = [[] for _ in range(n)]
    for u, w in arcs:
        out[u].append(w)
        inn[w].append(u)
    if any(len(out[v]) != 2 or len(inn[v]) != 2 for v in range(n)):
        raise PreconditionError("orientation", "in- and out-degrees must all be 2")
    ratio, rem = divmod(group.order(), n)
    if rem or ratio & (ratio - 1):
        raise InvariantViolation(f"|A| / n = {group.order()} / {n} is not a power of 2")
    s = ratio.bit_length() - 1
    if s > S_CAP:
        raise SearchCapReached(f"directed s-arc regularity needs s = {s} > {S_CAP}")
    s = max(s, 1)
    walk = [0]
    for _ in range(s):
        walk.append(min(out[walk[-1]]))
    if not group.pointwise_stabilizer(walk).is_trivial():
        raise InvariantViolation(f"group is not regular on directed {s}-arcs")
    closes = walk[0] in out[walk[-1]] or len(set(walk)) < len(walk)
    if closes:
        if _is_directed_wreath(out, inn):
            raise WreathDigraphError("directed s-arc closes up: the digraph is a directed wreath graph")
        raise InvariantViolation("directed s-arc closes up but the digraph is not a directed wreath graph")
    cols = [WHITE] * n
    for v in walk:
        cols[v] = BLACK
    sources = [v for v in range(n) if cols[v] == BLACK and all(cols[u] == WHITE for u in inn[v])]
    if sources != [walk[0]]:
        raise InvariantViolation(f"black vertices without black in-neighbour: {sources}")
    return DirectedArcColouring(s, tuple(walk), tuple(cols))


def colour_half_arc_transitive(g: Graph, trace: ConstructionTrace | None = None) -> Outcome:
    """Colour a directed ``s``-arc black in one orientation of a half-arc-transitive graph."""
    trace = trace or ConstructionTrace()
    _check_type2(g)
    if not is_edge_transitive(g) or is_arc_transitive(g):
        raise PreconditionError("half_arc_transitive", "graph must be edge- but not arc-transitive")
    branch(trace, "type2.half_arc_transitive", "orient by one arc orbit; a directed s-arc is regular")
    group = automorphism_group(g)
    first = (0, min(g.adjacency[0]))
    arc_orbit = next(orb for orb in orbits(group, g, "arcs") if first in orb)
    result = colour_directed_s_arc(g.n, arc_orbit, group)
    trace.add("directed_s_arc", f"directed {result.s}-arc with its start the only black source", result.arc)
    return verified(g, result.colouring, trace)


# -- not edge-transitive case ----------------------------------------------------------------


def _two_factor(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    g = Graph(n, edges)
    if any(g.degree(v) != 2 for v in range(n)):
        raise InvariantViolation("edge orbit is not a 2-factor")
    return g


def _cycles(f: Graph) -> list[tuple[int, ...]]:
    """Cycles of a 2-factor, each walked from its least vertex towards its smaller neighbour."""
    seen = [False] * f.n
    out = []
    for start in range(f.n):
        if seen[start]:
            continue
        walk = [start]
        seen[start] = True
        nxt = min(f.adjacency[start])
        while nxt != start:
            walk.append(nxt)
            seen[nxt] = True
            a, b = f.adjacency[nxt]
            nxt = b if a == walk[-2] else a
        out.append(tuple(walk))
    return out


def edge_orbit_factors(g: Graph) -> tuple[Graph, Graph]:
    """``(G1, G2)``: the two edge orbits as 2-factors, ``G1`` having the longer cycles.

    Ties go to the orbit containing the least edge.
    """
    edge_orbs = orbits(automorphism_group(g), g, "edges")
    if len(edge_orbs) != 2:
        raise PreconditionError("edge_orbits", f"expected 2 edge orbits, found {len(edge_orbs)}")
    factors = [_two_factor(g.n, orb) for orb in edge_orbs]
    factors.sort(key=lambda f: (-len(_cycles(f)[0]), min(f.edges)))
    return factors[0], factors[1]


@dataclass(frozen=True)
class InductionStep:
    """Outcome of one inductive step: the extra cycle ``d`` and the colours on ``C`` and ``d``."""

    d: tuple[int, ...]
    partial: PartialColouring
    case: str  # "no_twin", "twin_on_c" or "twin_off_c"


def cycle_colour_induction_step(g: Graph, g1: Graph, g2: Graph, v_prime: Sequence[int],
                                c: Sequence[int]) -> InductionStep:
    """Partially colour the ``G1``-cycle ``c`` (and possibly one more) so nothing new can move.

    ``v`` is the least vertex of ``c`` with a ``G2``-neighbour in ``v_prime``; a
    twin of ``v`` is another vertex in its orbit under the pointwise
    stabilizer of ``v_prime``. The returned colouring is checked: automorphisms
    fixing ``v_prime`` pointwise and ``c``, ``d`` setwise with their colours fix
    every vertex of ``c`` and ``d``.
    """
    vp = set(v_prime)
    cset = set(c)
    if cset & vp:
        raise PreconditionError("disjoint", "cycle meets V'")
    if len(c) < 3 or any(not g1.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
        raise PreconditionError("g1_cycle", "c is not a cycle of G1")
    cands = [x for x in c if any(w in vp for w in g2.adjacency[x])]
    if not cands:
        raise PreconditionError("neighbour", "no vertex of c has a G2-neighbour in V'")
    v = min(cands)
    stab = automorphism_group(g).pointwise_stabilizer(sorted(vp))
    twins = [u for u in stab.orbit(v) if u != v]
    if len(twins) > 1:
        raise InvariantViolation(f"vertex {v} has {len(twins)} twins")
    colours = {x: WHITE for x in c}
    colours[v] = BLACK
    d: tuple[int, ...] = tuple(c)
    if not twins:
        case = "no_twin"
        colours[min(g1.adjacency[v])] = BLACK
    elif twins[0] in cset:
        case = "twin_on_c"
        colours[min(w for w in g1.adjacency[v] if w != twins[0])] = BLACK
    else:
        case = "twin_off_c"
        u = twins[0]
        colours[min(g1.adjacency[v])] = BLACK
        d = next(cyc for cyc in _cycles(g1) if u in cyc)
        if set(d) & vp:
            raise InvariantViolation("twin cycle meets V'")
        for x in d:
            colours[x] = WHITE
        colours[min(g1.adjacency[u])] = BLACK
    _check_step(g, sorted(vp), colours)
    return InductionStep(d, PartialColouring(colours), case)


def _check_step(g: Graph, v_prime: list[int], colours: dict[int, int]) -> None:
    marks = {v: 3 + i for i, v in enumerate(v_prime)}
    cols = [marks.get(x, colours.get(x, 2)) for x in range(g.n)]
    group = coloured_automorphism_group(g, cols)
    moved = {x for p in group.generators for x in colours if p[x] != x}
    if moved:
        raise InvariantViolation(f"induction step leaves {sorted(moved)} movable")


def colour_type2_not_edge_transitive(g: Graph, trace: ConstructionTrace | None = None) -> Outcome:
    """Distinguishing 2-colouring when all edges have type 2 and there are two edge orbits."""
    trace = trace or ConstructionTrace()
    _check_type2(g)
    if is_edge_transitive(g):
        raise PreconditionError("not_edge_transitive", "graph is edge-transitive")
    g1, g2 = edge_orbit_factors(g)
    cycles1 = _cycles(g1)
    length = len(cycles1[0])
    if len(cycles1) == 1:
        branch(trace, "type2.single_cycle", "G1 is one long cycle: colour it distinguishingly")
        if length < 6:
            raise InvariantViolation(f"single G1 cycle of length {length} < 6")
        c = cycles1[0]
        cols = [WHITE] * g.n
        for i in (0, 1, 3):
            cols[c[i]] = BLACK
        trace.add("cycle_colouring", "black at cycle positions 0, 1, 3", [c[i] for i in (0, 1, 3)])
        return verified(g, cols, trace)
    if length == 3:
        return colour_line_graph_of_cubic(g, _cycles(g1) + _cycles(g2), trace, "type2.triangles")
    branch(trace, "type2.cycle_induction", "cycle-by-cycle induction anchored at one G1 cycle")
    cycle_of = {x: cyc for cyc in cycles1 for x in cyc}
    v1 = 0
    c1 = cycle_of[v1]
    c1set = set(c1)
    v_prime = [v1]
    cols: dict[int, int] = {}
    while True:
        vp = set(v_prime)
        cands = [x for x in range(g.n) if x not in vp and x not in c1set
                 and any(w in vp for w in g2.adjacency[x])]
        if not cands:
            break
        step = cycle_colour_induction_step(g, g1, g2, v_prime, cycle_of[min(cands)])
        cols.update(step.partial.colours)
        trace.add(f"induction.{step.case}", f"cycle through {min(cands)}",
                  [x for x, col in step.partial.colours.items() if col == BLACK])
        v_prime = sorted(vp | set(step.partial.colours))
    if len(cols) != g.n - len(c1):
        raise InvariantViolation("induction did not reach every cycle outside the anchor cycle")
    for x in c1:
        cols[x] = WHITE
    for x in (v1, *g1.adjacency[v1]):
        cols[x] = BLACK
    trace.add("anchor", "anchor vertex and both its G1-neighbours black", [v1, *g1.adjacency[v1]])
    return verified(g, [cols[x] for x in range(g.n)], trace)
