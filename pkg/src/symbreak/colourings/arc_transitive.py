"""Distinguishing 2-colourings of 4-valent arc-transitive graphs (edge-type partition (4))."""

from __future__ import annotations

from collections.abc import Iterator

from ..constructions import cage46, complete, heawood, heawood_bipcomp, hypercube, named
from ..distinguishing import default_budget, search_distinguishing
from ..graph import (
    Graph,
    bfs_distances,
    bfs_order,
    bipartite_complement,
    bipartition,
    delete_vertices,
    edge_key,
    girth,
    is_2_edge_connected,
    is_connected,
    line_graph,
)
from ..search import find_isomorphism
from ..symmetry import (
    automorphism_group,
    classify_two_arc,
    is_arc_transitive,
    local_group,
    max_common_neighbours_at_distance_two,
    straight_partner,
    transitivity_profile,
)
from .common import (
    BLACK,
    WHITE,
    ConstructionTrace,
    InvariantViolation,
    Outcome,
    PreconditionError,
    branch,
    exceptional,
    recognize_wreath,
    two_colouring_by_search,
    verified,
)
from .figures import colour_figure_cases
from .linegraph import colour_line_graph_of_cubic


def _check_arc_transitive(g: Graph) -> None:
    if g.regular_degree() != 4:
        raise PreconditionError("valency", "graph is not 4-regular")
    if not is_connected(g):
        raise PreconditionError("connected", "graph is not connected")
    if not is_arc_transitive(g):
        raise PreconditionError("arc_transitive", "graph is not arc-transitive")


def wreath_outcome(n: int, trace: ConstructionTrace) -> Outcome:
    return exceptional("K44_W4", trace) if n == 4 else exceptional("Wn", trace, n)


def _transport(src: Graph, src_cols, dst: Graph) -> list[int]:
    phi = find_isomorphism(src, dst)
    if phi is None:
        raise InvariantViolation("graphs expected to be isomorphic are not")
    cols = [WHITE] * dst.n
    for x in range(src.n):
        cols[phi[x]] = src_cols[x]
    return cols


# -- girth at least 5 ---------------------------------------------------------------------


def girth_cycles_through(g: Graph, v: int = 0) -> Iterator[tuple[int, ...]]:
    """Shortest cycles through ``v`` in lexicographic order, each listed once (from ``v``)."""
    gg = girth(g)
    if gg == float("inf"):
        return
    length = int(gg)
    path = [v]
    on_path = {v}

    def extend() -> Iterator[tuple[int, ...]]:
        if len(path) == length:
            if g.has_edge(path[-1], v) and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in g.adjacency[path[-1]]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                yield from extend()
                on_path.discard(w)
                path.pop()

    yield from extend()


def find_good_girth_cycle(g: Graph) -> tuple[int, ...]:
    """Least girth cycle through vertex 0 whose deletion leaves a 2-edge-connected graph."""
    gg = girth(g)
    if gg < 5:
        raise PreconditionError("girth", f"girth {gg} is below 5")
    for cyc in girth_cycles_through(g, 0):
        rest, _ = delete_vertices(g, cyc)
        if is_2_edge_connected(rest):
            return cyc
    raise InvariantViolation("no girth cycle leaves a 2-edge-connected remainder")


def colour_arc_transitive_girth5(g: Graph, trace: ConstructionTrace | None = None) -> Outcome:
    """Black tree around a girth cycle, then a stabilizer-driven sweep outward.

    The (4,6)-cage is handled by its explicit colouring.
    """
    trace = trace or ConstructionTrace()
    _check_arc_transitive(g)
    gg = girth(g)
    if gg < 5:
        raise PreconditionError("girth", f"girth {gg} is below 5")
    if g.n == 26 and find_isomorphism(g, cage46()) is not None:
        branch(trace, "arc_transitive.cage46", "incidence graph of the plane of order 3: explicit colouring")
        fig = colour_figure_cases("cage46")
        cols = _transport(fig.graph, fig.colouring, g)
        trace.add("figure_colouring", "explicit colouring around one white vertex",
                  [v for v in range(g.n) if cols[v] == BLACK])
        return verified(g, cols, trace)
    branch(trace, "arc_transitive.girth5", "tree around a good girth cycle, then stabilizer sweep")
    glen = int(gg)
    s = transitivity_profile(g).max_s
    if s > glen - 3:
        raise InvariantViolation(f"{s}-arc-transitive with girth {glen}: s exceeds girth - 3")
    c = find_good_girth_cycle(g)
    trace.add("girth_cycle", "girth cycle with 2-edge-connected complement", c)
    group = automorphism_group(g)
    x_group = group.pointwise_stabilizer(c[1:s + 2])
    v0_orbit = set(x_group.orbit(c[0]))
    others = [w for w in g.adjacency[c[1]] if w != c[2] and w not in v0_orbit]
    if not others:
        raise InvariantViolation("stabilizer of an s-arc is transitive on the next neighbours")
    v0p = min(others)
    tree = [v0p, *c[:glen - 1]]
    rest, kept = delete_vertices(g, tree)
    if not is_connected(rest):
        raise InvariantViolation("removing the tree disconnects the graph")
    last = c[glen - 1]
    cols = [WHITE] * g.n
    for x in tree:
        cols[x] = BLACK
    trace.add("tree", "black tree: girth cycle minus one vertex, plus one extra neighbour", tree)
    treeset = set(tree)
    dist = bfs_distances(g, last, {v for v in range(g.n) if v not in treeset})
    order = sorted((dist[x], x) for x in range(g.n) if x not in treeset and x != last)
    stab = group.pointwise_stabilizer([*tree, last])
    swept = []
    for _, x in order:
        if len(stab.orbit(x)) > 1:
            cols[x] = BLACK
            swept.append(x)
        stab = stab.stabilizer(x)
    trace.add("sweep", "black exactly where the running stabilizer moves the vertex", swept)
    return verified(g, cols, trace)


# -- girth 4 ------------------------------------------------------------------------------


def four_cycles(g: Graph) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle ``(a, b, c, d)`` once, with ``a`` least and ``b < d``."""
    out = []
    for a in range(g.n):
        nb = [w for w in g.adjacency[a] if w > a]
        for i, b in enumerate(nb):
            for d in nb[i + 1:]:
                for c in sorted(g.common_neighbours(b, d)):
                    if c > a:
                        out.append((a, b, c, d))
    return out


def _is_straight_cycle(g: Graph, cyc: tuple[int, ...]) -> bool:
    k = len(cyc)
    return all(classify_two_arc(g, (cyc[i - 1], cyc[i], cyc[(i + 1) % k])) == "straight" for i in range(k))


def _crooked_four_cycle(g: Graph) -> tuple[int, int, int, int] | None:
    """Least ``(u, 0, w, x)`` forming a 4-cycle with ``(u, 0, w)`` crooked."""
    nb = g.adjacency[0]
    for u in nb:
        for w in nb:
            if u == w or classify_two_arc(g, (u, 0, w)) != "crooked":
                continue
            common = sorted(g.common_neighbours(u, w) - {0})
            if common:
                return (u, 0, w, common[0])
    return None


def straight_cycle_graph(g: Graph) -> tuple[Graph, list[tuple[int, int, int, int]], list[tuple[int, int]]]:
    """Auxiliary graph on the (all straight) 4-cycles, adjacent when sharing a vertex.

    Returns ``(G', cycles, pair)`` where vertex ``x`` of ``g`` lies on the two
    cycles ``pair[x]``; so ``x`` is an edge of ``G'``.
    """
    cycles = four_cycles(g)
    if not all(_is_straight_cycle(g, cyc) for cyc in cycles):
        raise InvariantViolation("a 4-cycle is not straight")
    covered: dict[tuple[int, int], int] = {}
    for i, cyc in enumerate(cycles):
        for j in range(4):
            e = edge_key(cyc[j], cyc[(j + 1) % 4])
            if e in covered:
                raise InvariantViolation(f"edge {e} lies on two 4-cycles")
            covered[e] = i
    if len(covered) != g.m:
        raise InvariantViolation("4-cycles do not cover every edge")
    if 2 * len(cycles) != g.n:
        raise InvariantViolation(f"{len(cycles)} straight 4-cycles on {g.n} vertices")
    owners: list[list[int]] = [[] for _ in range(g.n)]
    for i, cyc in enumerate(cycles):
        for x in cyc:
            owners[x].append(i)
    if any(len(o) != 2 for o in owners):
        raise InvariantViolation("a vertex is not on exactly two 4-cycles")
    pair = [edge_key(*o) for o in owners]
    if len(set(pair)) != g.n:
        raise InvariantViolation("two 4-cycles share more than one vertex")
    return Graph(len(cycles), pair), cycles, pair


def _colour_straight_cycles(g: Graph, trace: ConstructionTrace, depth: int) -> Outcome:
    gp, cycles, pair = straight_cycle_graph(g)
    trace.add("auxiliary", f"graph on {gp.n} straight 4-cycles, depth {depth}", ())
    if gp.regular_degree() != 4:
        raise InvariantViolation("auxiliary graph is not 4-valent")
    if find_isomorphism(gp, complete(5)) is not None:
        raise InvariantViolation("auxiliary graph is K5, which has no locally D4 transitive action")
    inner = ConstructionTrace()
    sub = colour_arc_transitive(gp, inner, depth + 1)
    label = sub.exceptional.name if sub.exceptional else "2-distinguishable"
    for step in inner.steps:
        if step.rule.startswith("branch:"):
            trace.add(f"auxiliary.{step.rule}", step.anchor, ())
    trace.add("auxiliary_result", f"auxiliary graph is {label}", ())
    lg, lg_edges = line_graph(gp)
    index = {e: i for i, e in enumerate(lg_edges)}
    cols_l = search_distinguishing(automorphism_group(lg), 2, bfs_order(lg, 0), default_budget())
    if cols_l is None:
        raise InvariantViolation("line graph of the auxiliary graph is not 2-distinguishable")
    cols = [cols_l[index[pair[x]]] for x in range(g.n)]
    trace.add("lift", "vertices of G are edges of the auxiliary graph",
              [v for v in range(g.n) if cols[v] == BLACK])
    return verified(g, cols, trace)


def _colour_girth4(g: Graph, trace: ConstructionTrace, depth: int) -> Outcome:
    if max_common_neighbours_at_distance_two(g) >= 3:
        n = recognize_wreath(g)
        if n is not None:
            branch(trace, "arc_transitive.many_common.wreath", "vertices with identical neighbourhoods")
            return wreath_outcome(n, trace)
        if g.n == 10 and find_isomorphism(g, named("k5_tensor_k2")) is not None:
            branch(trace, "arc_transitive.many_common.k5xk2", "three common neighbours, not a wreath graph")
            return exceptional("K5xK2", trace)
        raise InvariantViolation("three common neighbours but neither a wreath graph nor K5 x K2")
    label = local_group(g, 0).iso_label
    if label in ("A4", "S4"):
        if g.n == 16 and find_isomorphism(g, hypercube(4)) is not None:
            branch(trace, "arc_transitive.two_arc.q4", "2-arc-transitive girth 4: the 4-cube")
            cols = two_colouring_by_search(g)
            if cols is None:
                raise InvariantViolation("Q4 is not 2-distinguishable")
            trace.add("search", "exact search for a 2-colouring", [v for v in range(g.n) if cols[v] == BLACK])
            return verified(g, cols, trace)
        if g.n == 14 and find_isomorphism(g, heawood_bipcomp()) is not None:
            branch(trace, "arc_transitive.two_arc.heawood_bipcomp",
                   "2-arc-transitive girth 4: shares its group with the Heawood graph")
            h = bipartite_complement(g, bipartition(g))
            if find_isomorphism(h, heawood()) is None:
                raise InvariantViolation("bipartite complement is not the Heawood graph")
            cols = two_colouring_by_search(h)
            if cols is None:
                raise InvariantViolation("Heawood graph is not 2-distinguishable")
            trace.add("heawood_colouring", "distinguishing 2-colouring of the bipartite complement",
                      [v for v in range(g.n) if cols[v] == BLACK])
            return verified(g, cols, trace)
        raise InvariantViolation("2-arc-transitive girth 4 graph is neither Q4 nor the Heawood bipartite complement")
    if label in ("C4", "V4"):
        branch(trace, "arc_transitive.arc_regular", f"locally {label}: arc-regular")
        nb = sorted(g.adjacency[0])
        cols = [WHITE] * g.n
        for x in (0, *nb[:3]):
            cols[x] = BLACK
        trace.add("arc", "one vertex and three of its neighbours black", (0, *nb[:3]))
        return verified(g, cols, trace)
    if label != "D4":
        raise InvariantViolation(f"arc-transitive graph with local group {label}")
    crooked = _crooked_four_cycle(g)
    if crooked is not None:
        branch(trace, "arc_transitive.d4.crooked", "locally D4 with a 4-cycle containing a crooked 2-arc")
        u, v, w, _ = crooked
        y = straight_partner(g, v, w)
        if g.has_edge(y, u):
            raise InvariantViolation("end of the straight continuation is adjacent to the start")
        path = (u, v, w, y)
        cols = [WHITE] * g.n
        for x in path:
            cols[x] = BLACK
        trace.add("path", "crooked then straight 2-arc coloured black", path)
        return verified(g, cols, trace)
    branch(trace, "arc_transitive.d4.straight", "all 4-cycles straight: recurse on the 4-cycle graph")
    return _colour_straight_cycles(g, trace, depth)


def colour_arc_transitive(g: Graph, trace: ConstructionTrace | None = None, depth: int = 0) -> Outcome:
    """Distinguishing 2-colouring of a connected 4-valent arc-transitive graph, or its exceptional family."""
    trace = trace or ConstructionTrace()
    _check_arc_transitive(g)
    gg = girth(g)
    if gg == 3:
        if g.n == 5 and find_isomorphism(g, complete(5)) is not None:
            branch(trace, "arc_transitive.girth3.k5", "complete graph on five vertices")
            return exceptional("K5", trace)
        if recognize_wreath(g) == 3:
            branch(trace, "arc_transitive.girth3.w3", "octahedron")
            return exceptional("Wn", trace, 3)
        return colour_line_graph_of_cubic(g, list(_triangles(g)), trace, "arc_transitive.girth3")
    if gg >= 5:
        return colour_arc_transitive_girth5(g, trace)
    return _colour_girth4(g, trace, depth)


def _triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for a, b in g.edges:
        for c in sorted(g.common_neighbours(a, b)):
            if c > b:
                yield (a, b, c)
