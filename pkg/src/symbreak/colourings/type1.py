"""Distinguishing 2-colourings of 4-valent vertex-transitive graphs with type-1 edges.

``G_{t>=2}`` denotes the graph left after deleting every type-1 edge; its
components form a block system of ``Aut(G)``.
"""

from __future__ import annotations

from collections.abc import Sequence

from ..constructions import complete, complete_bipartite, cycle_of_k33, named, petersen
from ..distinguishing import distinguishing_number, is_distinguishing
from ..graph import Graph, bfs_distances, components, contract_partition, delete_edges
from ..search import find_isomorphism
from ..symmetry import edge_types, is_vertex_transitive
from .common import (
    BLACK,
    WHITE,
    ConstructionTrace,
    InvariantViolation,
    Outcome,
    PreconditionError,
    branch,
    exceptional,
    induced,
    rooted_isomorphism,
    stabilizer_is_trivial,
    two_colouring_by_search,
    verified,
)
from .figures import colour_figure_cases, cycle_of_k33_colouring


def type_two_plus_components(g: Graph) -> tuple[Graph, list[list[int]]]:
    """``G_{t>=2}`` and its components (each sorted, ordered by least vertex)."""
    report = edge_types(g)
    gt2 = delete_edges(g, report.edges_of_type(1))
    return gt2, components(gt2)


def _check_4vt(g: Graph) -> None:
    if g.regular_degree() != 4:
        raise PreconditionError("valency", "graph is not 4-regular")
    if not is_vertex_transitive(g):
        raise PreconditionError("vertex_transitive", "graph is not vertex-transitive")


# -- black-count encoding over a quotient ------------------------------------------


def _repeated_pair(g: Graph, comps: list[list[int]]) -> tuple[int, int] | None:
    """Two components joined by more than one type-1 edge, if any."""
    owner = {v: i for i, comp in enumerate(comps) for v in comp}
    seen: set[tuple[int, int]] = set()
    for u, v in edge_types(g).edges_of_type(1):
        pair = (min(owner[u], owner[v]), max(owner[u], owner[v]))
        if pair in seen:
            return pair
        seen.add(pair)
    return None


def colour_type1_unique(g: Graph, trace: ConstructionTrace | None = None) -> Outcome:
    """Colour when every vertex has one type-1 edge and components meet in at most one edge.

    The quotient ``H`` (components contracted) is ``k``-regular for components
    of size ``k``, so it has a distinguishing colouring with colours ``0..k``;
    a component receiving colour ``c`` gets its ``c`` least vertices black.
    """
    trace = trace or ConstructionTrace()
    _check_4vt(g)
    report = edge_types(g)
    if report.vertex_partition.count(1) != 1:
        raise PreconditionError("unique_type1_edge", "vertices are not on exactly one type-1 edge")
    gt2, comps = type_two_plus_components(g)
    if len(comps) < 2:
        raise PreconditionError("disconnected", "G_{t>=2} is connected")
    pair = _repeated_pair(g, comps)
    if pair is not None:
        raise PreconditionError("one_edge_per_pair", f"components {pair} are joined by several type-1 edges")
    k = len(comps[0])
    quotient = contract_partition(g, comps)
    if quotient.regular_degree() != k:
        raise InvariantViolation("contracted graph is not regular of the component size")
    d, col = distinguishing_number(quotient, k_max=k + 1)
    trace.add("quotient_colouring", f"distinguishing {d}-colouring of the {k}-regular quotient", ())
    cols = [WHITE] * g.n
    for i, comp in enumerate(comps):
        for v in comp[:col.colours[i]]:
            cols[v] = BLACK
    trace.add("black_counts", "component with quotient colour c gets c black vertices",
              [v for v in range(g.n) if cols[v] == BLACK])
    return verified(g, cols, trace)


# -- one anchored component, copies elsewhere ------------------------------------------


def colour_via_component(g: Graph, h: Graph, h_colouring: Sequence[int], root: int,
                         trace: ConstructionTrace | None = None) -> Outcome:
    """Spread a rooted colouring of the component ``h`` over all components of ``G_{t>=2}``.

    ``h_colouring`` must leave only the identity among automorphisms of ``h``
    fixing ``root``. One component keeps a single black vertex ``v_1``; every
    other component copies ``h_colouring`` through an isomorphism sending
    ``root`` to the vertex of that component nearest to ``v_1``.
    """
    trace = trace or ConstructionTrace()
    gt2, comps = type_two_plus_components(g)
    if len(comps) == 1:
        if not is_distinguishing(h, h_colouring):
            raise PreconditionError("component_colouring", "single component needs a distinguishing colouring")
        phi = find_isomorphism(h, gt2)
        if phi is None:
            raise PreconditionError("component_colouring", "h is not isomorphic to G_{t>=2}")
        cols = [WHITE] * g.n
        for x in range(h.n):
            cols[phi[x]] = h_colouring[x]
        trace.add("single_component", "a distinguishing colouring of G_{t>=2} distinguishes G",
                  [v for v in range(g.n) if cols[v] == BLACK])
        return verified(g, cols, trace)
    if not stabilizer_is_trivial(h, h_colouring, [root]):
        raise PreconditionError("component_colouring", "some non-identity automorphism fixes the root and the colouring")
    hc = list(h_colouring)
    if sum(1 for c in hc if c == BLACK) == 1:
        hc[root] = WHITE if hc[root] == BLACK else BLACK
        trace.add("recolour_root", "avoid exactly one black vertex per copied component", ())
    first = comps[0]
    v1 = first[0]
    first_set = set(first)
    allowed = {v for v in range(g.n) if v not in first_set} | {v1}
    dist = bfs_distances(g, v1, allowed)
    cols = [WHITE] * g.n
    cols[v1] = BLACK
    trace.add("anchor", "the unique component with exactly one black vertex", [v1])
    for comp in comps[1:]:
        reach = [(dist[v], v) for v in comp if dist[v] >= 0]
        if not reach:
            raise InvariantViolation("component unreachable once the anchor component is removed")
        vi = min(reach)[1]
        sub, kept = induced(gt2, comp)
        phi = rooted_isomorphism(h, root, sub, kept.index(vi))
        if phi is None:
            raise PreconditionError("component_colouring", "components are not isomorphic to h")
        for x in range(h.n):
            cols[kept[phi[x]]] = hc[x]
        trace.add("copy", f"component entered at {vi}", [kept[phi[x]] for x in range(h.n) if hc[x] == BLACK])
    return verified(g, cols, trace)


# -- dispatcher -------------------------------------------------------------------------


def _cycle_order(gc: Graph, comp: list[int]) -> list[int]:
    """Vertices of a cycle component in walking order from its least vertex."""
    order = [comp[0]]
    prev = -1
    while True:
        cur = order[-1]
        nxt = min(w for w in gc.adjacency[cur] if w != prev)
        if nxt == order[0]:
            break
        prev = cur
        order.append(nxt)
    return order


def _identify_cubic(h: Graph) -> str | None:
    for name, ref in (("K4", complete(4)), ("K33", complete_bipartite(3)), ("Q3", named("hypercube", 3)),
                      ("Petersen", petersen())):
        if find_isomorphism(h, ref) is not None:
            return name
    return None


def colour_type1(g: Graph, trace: ConstructionTrace | None = None) -> Outcome:
    """Distinguishing 2-colouring of a 4-valent vertex-transitive graph with type-1 edges.

    Returns an exceptional outcome for ``K4 [] K2``.
    """
    trace = trace or ConstructionTrace()
    _check_4vt(g)
    part = edge_types(g).vertex_partition
    if 1 not in part:
        raise PreconditionError("type1", f"edge-type partition {part} has no part 1")
    if part == (1, 1, 1, 1):
        branch(trace, "type1.all_type1", "trivial vertex stabilizer: one black vertex")
        cols = [WHITE] * g.n
        cols[0] = BLACK
        trace.add("single_black", "a single black vertex", [0])
        return verified(g, cols, trace)
    gt2, comps = type_two_plus_components(g)
    if part == (1, 1, 2):
        if any(gt2.degree(v) != 2 for v in range(g.n)):
            raise InvariantViolation("G_{t>=2} is not a union of cycles")
        if len(comps) == 1:
            branch(trace, "type1.cycles.single", "one long cycle: colour it distinguishingly")
            order = _cycle_order(gt2, comps[0])
            if len(order) < 6:
                raise InvariantViolation(f"single type-2 cycle of length {len(order)} < 6")
            cols = [WHITE] * g.n
            for i in (0, 1, 3):
                cols[order[i]] = BLACK
            trace.add("cycle_colouring", "black at cycle positions 0, 1, 3", [order[i] for i in (0, 1, 3)])
            return verified(g, cols, trace)
        branch(trace, "type1.cycles.multiple", "copy a rooted cycle colouring into every cycle")
        sub, kept = induced(gt2, comps[0])
        order = _cycle_order(sub, list(range(sub.n)))
        hc = [WHITE] * sub.n
        hc[order[0]] = BLACK
        hc[order[1]] = BLACK
        return colour_via_component(g, sub, hc, order[0], trace)
    if part != (1, 3):
        raise InvariantViolation(f"unexpected edge-type partition {part}")
    sub, kept = induced(gt2, comps[0])
    if sub.regular_degree() != 3:
        raise InvariantViolation("components of G_{t>=2} are not cubic")
    hc = two_colouring_by_search(sub)
    if hc is not None:
        if len(comps) == 1:
            branch(trace, "type1.cubic.connected", "G_{t>=2} connected and 2-distinguishable")
        else:
            branch(trace, "type1.cubic.two_distinguishable", "components 2-distinguishable")
        return colour_via_component(g, sub, hc, 0, trace)
    kind = _identify_cubic(sub)
    if kind is None:
        raise InvariantViolation("cubic component with D > 2 outside K4, K33, Q3, Petersen")
    if len(comps) == 1:
        raise InvariantViolation(f"G_{{t>=2}} is a connected {kind}")
    if kind in ("Q3", "Petersen"):
        branch(trace, "type1.cubic.rooted_figure", f"components {kind}: rooted colouring with trivial stabilizer")
        fig = colour_figure_cases("q3" if kind == "Q3" else "petersen")
        return colour_via_component(g, fig.graph, fig.colouring, fig.root, trace)
    if _repeated_pair(g, comps) is None:
        branch(trace, "type1.cubic.unique_edges", "components joined by single type-1 edges")
        return colour_type1_unique(g, trace)
    if kind == "K4":
        branch(trace, "type1.exceptional", "K4 components joined by perfect matchings")
        if find_isomorphism(g, named("k4_box_k2")) is None:
            raise InvariantViolation("K4 components with repeated type-1 edges but not K4 [] K2")
        return exceptional("K4boxK2", trace)
    branch(trace, "type1.cubic.cycle_of_k33", "K33 components joined in a cycle by matchings")
    n = len(comps)
    ref = cycle_of_k33(n)
    phi = find_isomorphism(ref, g)
    if phi is None:
        raise InvariantViolation("K33 components with repeated type-1 edges but not a cycle of K33")
    ref_cols = cycle_of_k33_colouring(n)
    cols = [WHITE] * g.n
    for x in range(ref.n):
        cols[phi[x]] = ref_cols[x]
    trace.add("figure_colouring", "unique white-white matching edge", [v for v in range(g.n) if cols[v] == BLACK])
    return verified(g, cols, trace)
