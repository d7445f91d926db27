"""Immutable simple graphs on vertices ``0..n-1`` and the operators built on them.

Every operator that produces a new graph documents how vertices are numbered
so that colourings computed on the result can be mapped back.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence
from itertools import combinations

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class Graph:
    """A finite simple undirected graph with dense vertex ids.

    Adjacency lists are sorted ascending and the edge list holds each edge once
    as ``(u, v)`` with ``u < v``, in lexicographic order.
    """

    __slots__ = ("n", "adjacency", "edges", "_adjsets", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        canon: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self._adjsets = tuple(frozenset(a) for a in self.adjacency)
        self._hash = hash((n, self.edges))

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        edges = [(u, v) for u, nb in enumerate(adjacency) for v in nb if u < v]
        g = cls(len(adjacency), edges)
        for u, nb in enumerate(adjacency):
            if set(nb) != g._adjsets[u]:
                raise GraphError(f"adjacency not symmetric at vertex {u}")
        return g

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        ds = set(self.degrees())
        if len(ds) == 1:
            return ds.pop()
        return 0 if self.n == 0 else None

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def common_neighbours(self, u: int, v: int) -> frozenset[int]:
        return self._adjsets[u] & self._adjsets[v]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- traversal and structural queries ---------------------------------------


def bfs_distances(g: Graph, source: int, allowed: frozenset[int] | set[int] | None = None) -> list[int]:
    """Distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0 and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_order(g: Graph, source: int = 0) -> list[int]:
    """Vertices in BFS order from ``source``; other components follow by least id."""
    seen = [False] * g.n
    order: list[int] = []
    for start in [source] + list(range(g.n)):
        if start >= g.n or seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components (sorted vertex lists, ordered by least vertex)."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph) -> float:
    best = 0
    for v in range(g.n):
        d = bfs_distances(g, v)
        if -1 in d:
            return math.inf
        best = max(best, max(d))
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def bridges(g: Graph) -> list[Edge]:
    """Cut edges, found with an iterative low-link DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[Edge] = []
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, x, iter(g.adjacency[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[x])
                if low[x] > disc[parent]:
                    out.append(edge_key(parent, x))
    return sorted(out)


def is_2_edge_connected(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and (g.n == 1 or not bridges(g))


def _connected_without(g: Graph, removed: set[int]) -> bool:
    rest = g.n - len(removed)
    if rest <= 1:
        return True
    start = next(v for v in range(g.n) if v not in removed)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return len(seen) == rest


def _k_connected_exhaustive(g: Graph, k: int) -> bool:
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not _connected_without(g, set(cut)):
                return False
    return True


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int, limit: int) -> int:
    """Menger count of internally disjoint s-t paths, capped at ``limit``.

    Unit-capacity max-flow on the split graph: vertex ``x`` becomes ``x_in -> x_out``.
    """
    cap: dict[tuple[int, int], int] = {}
    succ: dict[int, list[int]] = {i: [] for i in range(2 * g.n)}

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            succ[a].append(b)
            succ[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = g.n + 1
    for x in range(g.n):
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in succ[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def _k_connected_flow(g: Graph, k: int) -> bool:
    if g.n <= k:
        return g.n >= 1 and all(g.degree(v) == g.n - 1 for v in range(g.n)) and k <= g.n
    if min(g.degrees()) < k:
        return False
    # Even's scheme: some vertex among the first k lies outside any minimum cut.
    for i in range(k):
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j) and _max_vertex_disjoint_paths(g, i, j, k) < k:
                return False
    return True


def is_k_connected(g: Graph, k: int, method: str = "auto") -> bool:
    """``True`` if ``g`` stays connected after deleting any ``k-1`` vertices.

    ``method`` is ``"exhaustive"`` (vertex-cut enumeration), ``"flow"``
    (Menger/max-flow) or ``"auto"`` (exhaustive up to 64 vertices).
    """
    if k <= 0:
        return True
    if g.n == 0:
        return False
    if g.n <= k:
        # Complete graphs on n vertices count as (n-1)-connected only.
        return False
    if method == "auto":
        method = "exhaustive" if g.n <= 64 else "flow"
    if method == "exhaustive":
        return _k_connected_exhaustive(g, k)
    if method == "flow":
        if not is_connected(g):
            return False
        return _k_connected_flow(g, k)
    raise ValueError(f"unknown method {method!r}")


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartition(g: Graph) -> list[int] | None:
    """Proper 2-colouring (side per vertex) or ``None``; side of least vertex per component is 0."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def _unused_reachable(g: Graph, end: int, used: list[bool], remaining: int) -> bool:
    """Whether every unused vertex is reachable from ``end`` through unused vertices."""
    seen = {end}
    stack = [end]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if not used[y] and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) - 1 == remaining


def hamiltonian_path(g: Graph, max_nodes: int = 2_000_000) -> list[int] | None:
    """A Hamiltonian path by backtracking from the least start vertex.

    Candidates are tried fewest-unused-neighbours first, ties by vertex id.
    """
    if g.n == 0:
        return []
    nodes = 0
    path: list[int] = []
    used = [False] * g.n

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError("hamiltonian path search exceeded its node budget")
        if len(path) == g.n:
            return True
        if not _unused_reachable(g, path[-1], used, g.n - len(path)):
            return False
        free = [y for y in g.adjacency[path[-1]] if not used[y]]
        free.sort(key=lambda y: (sum(1 for z in g.adjacency[y] if not used[z]), y))
        for y in free:
            if not used[y]:
                used[y] = True
                path.append(y)
                if extend():
                    return True
                path.pop()
                used[y] = False
        return False

    for s in range(g.n):
        used[s] = True
        path.append(s)
        if extend():
            return path
        path.pop()
        used[s] = False
    return None


# -- operators ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)))


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Line graph and its vertex map: vertex ``i`` of the result is ``g.edges[i]``."""
    idx = g.edge_index()
    out = []
    for v in range(g.n):
        inc = [idx[edge_key(v, w)] for w in g.adjacency[v]]
        out.extend(combinations(inc, 2))
    return Graph(g.m, out), g.edges


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(u, v)`` is numbered ``u * h.n + v``."""
    k = h.n
    edges = [(u * k + a, u * k + b) for u in range(g.n) for a, b in h.edges]
    edges += [(u * k + a, w * k + a) for u, w in g.edges for a in range(k)]
    return Graph(g.n * k, edges)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Categorical product; row-major numbering as in :func:`cartesian_product`."""
    k = h.n
    edges = []
    for u, w in g.edges:
        for a, b in h.edges:
            edges.append((u * k + a, w * k + b))
            edges.append((u * k + b, w * k + a))
    return Graph(g.n * k, edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """``g[h]``: ``(u,a) ~ (w,b)`` iff ``u ~ w`` in g, or ``u = w`` and ``a ~ b`` in h."""
    k = h.n
    edges = [(u * k + a, u * k + b) for u in range(g.n) for a, b in h.edges]
    edges += [(u * k + a, w * k + b) for u, w in g.edges for a in range(k) for b in range(k)]
    return Graph(g.n * k, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def bipartite_complement(g: Graph, partition: Sequence[int]) -> Graph:
    """Swap edges and non-edges between the two sides of ``partition`` (side per vertex)."""
    if len(partition) != g.n:
        raise GraphError("partition length does not match vertex count")
    for u, v in g.edges:
        if partition[u] == partition[v]:
            raise GraphError(f"edge ({u}, {v}) lies inside one side of the partition")
    left = [v for v in range(g.n) if partition[v] == 0]
    right = [v for v in range(g.n) if partition[v] != 0]
    return Graph(g.n, ((u, v) for u in left for v in right if not g.has_edge(u, v)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``vertices``; vertex ``i`` of the result is ``kept[i]`` (ascending)."""
    kept = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(kept)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(kept), edges), kept


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, list[int]]:
    """Delete ``removed``; survivors keep their relative order."""
    gone = set(removed)
    for v in gone:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def delete_edges(g: Graph, removed: Iterable[Sequence[int]]) -> Graph:
    gone = {edge_key(e[0], e[1]) for e in removed}
    return Graph(g.n, (e for e in g.edges if e not in gone))


def contract_partition(g: Graph, blocks: Sequence[Iterable[int]]) -> Graph:
    """Quotient graph: block ``i`` becomes vertex ``i``; loops and multi-edges dropped."""
    owner = [-1] * g.n
    for i, block in enumerate(blocks):
        for v in block:
            if owner[v] >= 0:
                raise GraphError(f"vertex {v} in two blocks")
            owner[v] = i
    if -1 in owner:
        raise GraphError("blocks do not cover every vertex")
    return Graph(len(blocks), ((owner[u], owner[v]) for u, v in g.edges if owner[u] != owner[v]))
