"""Colouring a 4-valent graph that is the line graph of a cubic graph, found through its triangles."""

from __future__ import annotations

from collections.abc import Sequence

from ..constructions import complete, complete_bipartite
from ..distinguishing import default_budget, search_distinguishing
from ..graph import Graph, bfs_order, edge_key, line_graph
from ..search import find_isomorphism
from ..symmetry import automorphism_group
from .common import BLACK, ConstructionTrace, InvariantViolation, Outcome, branch, exceptional, verified


def triangle_root(g: Graph, triangles: Sequence[Sequence[int]]) -> tuple[Graph, list[tuple[int, int]]]:
    """Cubic ``H`` with ``G = L(H)``: vertices are ``triangles``, vertex ``v`` of ``G`` is edge ``h_edges[v]``.

    Every vertex of ``g`` must lie in exactly two of the triangles.
    """
    owner: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for t, tri in enumerate(triangles):
        for v in tri:
            owner[v].append(t)
    if any(len(ts) != 2 for ts in owner.values()):
        raise InvariantViolation("some vertex is not on exactly two of the triangles")
    h_edges = [edge_key(*owner[v]) for v in range(g.n)]
    h = Graph(len(triangles), h_edges)
    if h.regular_degree() != 3 or h.m != g.n:
        raise InvariantViolation("triangle intersection graph is not a cubic graph with G as line graph")
    lg, _ = line_graph(h)
    if find_isomorphism(lg, g) is None:
        raise InvariantViolation("G is not the line graph of its triangle intersection graph")
    return h, h_edges


def colour_line_graph_of_cubic(g: Graph, triangles: Sequence[Sequence[int]], trace: ConstructionTrace,
                               prefix: str) -> Outcome:
    """2-colour ``G = L(H)`` through a distinguishing 2-edge-colouring of ``H``.

    ``H`` equal to ``K4`` or ``K33`` yields the exceptional ``W3`` or ``K3 [] K3``.
    """
    h, h_edges = triangle_root(g, triangles)
    if find_isomorphism(h, complete(4)) is not None:
        branch(trace, f"{prefix}.exceptional", "triangles form L(K4)")
        return exceptional("Wn", trace, 3)
    if find_isomorphism(h, complete_bipartite(3)) is not None:
        branch(trace, f"{prefix}.exceptional", "triangles form L(K33)")
        return exceptional("K3boxK3", trace)
    branch(trace, prefix, "G is the line graph of a cubic graph: 2-colour its edges")
    edge_group = automorphism_group(h).induced_action(h.edges)
    lg, _ = line_graph(h)
    cols_h = search_distinguishing(edge_group, 2, bfs_order(lg, 0), default_budget())
    if cols_h is None:
        raise InvariantViolation("cubic graph without a distinguishing 2-edge-colouring")
    index = {e: i for i, e in enumerate(h.edges)}
    cols = [cols_h[index[h_edges[v]]] for v in range(g.n)]
    trace.add("edge_colouring", "distinguishing 2-edge-colouring of the triangle graph",
              [v for v in range(g.n) if cols[v] == BLACK])
    return verified(g, cols, trace)
