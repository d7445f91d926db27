"""Individualisation-refinement search over ordered vertex partitions.

Partitions are stored nauty-style: ``lab`` lists the vertices cell by cell and
cells are addressed by their start position in ``lab``. Refinement is to the
coarsest equitable partition using neighbour counts; the trace of every split
is recorded so two nodes can be compared label-independently.

The first leaf of the search tree anchors automorphism discovery: for every
target cell on the first path each vertex not yet known to lie in the orbit of
the first-path choice is tried, and the subtree below it is searched for a
leaf that differs from the first leaf by an automorphism. The generators found
this way form a strong generating set relative to the first-path base.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .graph import Graph
from .perm import Perm, PermGroup, inverse, orbit_partition


@dataclass
class _Node:
    lab: list[int]
    cellof: list[int]
    size: list[int]
    ncells: int
    trace: list = field(default_factory=list)

    def copy(self) -> _Node:
        return _Node(self.lab[:], self.cellof[:], self.size[:], self.ncells)

    def is_discrete(self) -> bool:
        return self.ncells == len(self.lab)

    def target_cell(self) -> int:
        """Start of the first smallest non-singleton cell."""
        best, best_size = -1, 0
        i = 0
        n = len(self.lab)
        while i < n:
            s = self.size[i]
            if s > 1 and (best < 0 or s < best_size):
                best, best_size = i, s
            i += s
        return best

    def cell(self, start: int) -> list[int]:
        return self.lab[start:start + self.size[start]]


class SearchBudgetExceeded(RuntimeError):
    pass


class _Refiner:
    def __init__(self, g: Graph, colouring: Sequence[int] | None = None):
        self.g = g
        self.adj = g.adjacency
        self.colouring = list(colouring) if colouring is not None else [0] * g.n
        if len(self.colouring) != g.n:
            raise ValueError("colouring length does not match vertex count")

    def root(self) -> _Node:
        n = self.g.n
        values = sorted(set(self.colouring))
        lab: list[int] = []
        cellof = [0] * n
        size = [0] * n
        starts = []
        for c in values:
            members = [v for v in range(n) if self.colouring[v] == c]
            s = len(lab)
            starts.append(s)
            size[s] = len(members)
            for v in members:
                cellof[v] = s
            lab.extend(members)
        node = _Node(lab, cellof, size, len(values))
        node.trace.append((-3, len(values), tuple((c, size[s]) for c, s in zip(values, starts))))
        self.refine(node, starts)
        return node

    def refine(self, node: _Node, queue: list[int], reference: list | None = None) -> bool:
        """Refine in place to the coarsest equitable partition finer than ``node``.

        With ``reference`` set, abort (returning ``False``) as soon as the trace
        departs from it; ``node.trace`` then holds the prefix produced so far.
        """
        lab, cellof, size, adj = node.lab, node.cellof, node.size, self.adj
        trace = node.trace
        inq = set(queue)
        q = list(queue)
        while q:
            w = q.pop(0)
            inq.discard(w)
            cnt: dict[int, int] = {}
            for x in lab[w:w + size[w]]:
                for y in adj[x]:
                    cnt[y] = cnt.get(y, 0) + 1
            for c in sorted({cellof[y] for y in cnt}):
                sz = size[c]
                if sz == 1:
                    continue
                members = lab[c:c + sz]
                keys = [cnt.get(x, 0) for x in members]
                lo = min(keys)
                if lo == max(keys):
                    continue
                pairs = sorted(zip(keys, members))
                lab[c:c + sz] = [x for _, x in pairs]
                frags: list[tuple[int, int, int]] = []
                pos = c
                i = 0
                while i < sz:
                    k = pairs[i][0]
                    j = i
                    while j < sz and pairs[j][0] == k:
                        cellof[pairs[j][1]] = pos
                        j += 1
                    size[pos] = j - i
                    frags.append((pos, j - i, k))
                    pos += j - i
                    i = j
                node.ncells += len(frags) - 1
                entry = (w, c, tuple((k, ln) for _, ln, k in frags))
                trace.append(entry)
                if reference is not None:
                    idx = len(trace) - 1
                    if idx >= len(reference) or reference[idx] != entry:
                        return False
                if c in inq:
                    extra = [p for p, _, _ in frags[1:]]
                else:
                    largest = max(range(len(frags)), key=lambda t: (frags[t][1], -t))
                    extra = [p for t, (p, _, _) in enumerate(frags) if t != largest]
                for p in extra:
                    if p not in inq:
                        inq.add(p)
                        q.append(p)
        trace.append((-1, node.ncells, ()))
        if reference is not None:
            if len(trace) != len(reference) or trace[-1] != reference[-1]:
                return False
        return True

    def individualize(self, node: _Node, v: int, reference: list | None = None) -> _Node | None:
        child = node.copy()
        lab, cellof, size = child.lab, child.cellof, child.size
        c = cellof[v]
        sz = size[c]
        i = lab.index(v, c, c + sz)
        lab[c], lab[i] = lab[i], lab[c]
        size[c] = 1
        size[c + 1] = sz - 1
        for x in lab[c + 1:c + sz]:
            cellof[x] = c + 1
        child.ncells += 1
        child.trace = [(-2, c, (sz,))]
        if reference is not None and reference[0] != child.trace[0]:
            return None
        ok = self.refine(child, [c], reference)
        return child if ok else None

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        adj = self.g._adjsets
        col = self.colouring
        for u in range(self.g.n):
            if col[perm[u]] != col[u]:
                return False
        for u, v in self.g.edges:
            if perm[v] not in adj[perm[u]]:
                return False
        return True


def _leaf_map(first: list[int], other: list[int], n: int) -> Perm:
    perm = [0] * n
    for a, b in zip(first, other):
        perm[a] = b
    return tuple(perm)


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0


def automorphism_group(g: Graph, colouring: Sequence[int] | None = None,
                       stats: SearchStats | None = None,
                       node_limit: int | None = None) -> PermGroup:
    """Full automorphism group of ``g`` (preserving ``colouring`` if given).

    The returned group's chain uses the first-path base of the search tree.
    """
    ref = _Refiner(g, colouring)
    stats = stats or SearchStats()
    n = g.n
    if n == 0:
        return PermGroup(0)
    path = [ref.root()]
    base: list[int] = []
    targets: list[int] = []
    while not path[-1].is_discrete():
        t = path[-1].target_cell()
        v = path[-1].lab[t]
        targets.append(t)
        base.append(v)
        path.append(ref.individualize(path[-1], v))
        stats.nodes += 1
    first_leaf = path[-1].lab
    gens: list[Perm] = []

    def dfs(node: _Node, level: int) -> Perm | None:
        stats.nodes += 1
        if node_limit is not None and stats.nodes > node_limit:
            raise SearchBudgetExceeded(f"automorphism search exceeded {node_limit} nodes")
        if node.is_discrete():
            stats.leaves += 1
            perm = _leaf_map(first_leaf, node.lab, n)
            return perm if ref.is_automorphism(perm) else None
        t = targets[level]
        for w in node.cell(t):
            child = ref.individualize(node, w, path[level + 1].trace)
            if child is None:
                continue
            found = dfs(child, level + 1)
            if found is not None:
                return found
        return None

    for level in range(len(base) - 1, -1, -1):
        node = path[level]
        known = {base[level]}
        for w in node.cell(targets[level]):
            if w in known:
                continue
            child = ref.individualize(node, w, path[level + 1].trace)
            found = dfs(child, level + 1) if child is not None else None
            if found is not None:
                gens.append(found)
                for orb in orbit_partition(n, gens):
                    if base[level] in orb:
                        known = set(orb)
                        break
    group = PermGroup(n, gens, base)
    return group


def _certificate(g: Graph, colouring: Sequence[int], lab: Sequence[int]) -> tuple:
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges)
    return (g.n, tuple(colouring[v] for v in lab), tuple(edges))


def canonical_labelling(g: Graph, colouring: Sequence[int] | None = None,
                        group: PermGroup | None = None) -> tuple[list[int], tuple]:
    """``(lab, certificate)``: ``lab[i]`` is the vertex placed at canonical position ``i``.

    The canonical leaf minimises ``(trace sequence, certificate)`` over the whole
    search tree. Children in one orbit of the automorphisms fixing the node's
    individualised vertices give isomorphic subtrees, so only one per orbit is
    expanded.
    """
    ref = _Refiner(g, colouring)
    col = ref.colouring
    if group is None:
        group = automorphism_group(g, colouring)
    best: list = [None, None]  # (trace key, certificate), lab
    stab_cache: dict[tuple[int, ...], PermGroup] = {}

    def stabilizer(prefix: tuple[int, ...]) -> PermGroup:
        if prefix not in stab_cache:
            stab_cache[prefix] = group.pointwise_stabilizer(prefix)
        return stab_cache[prefix]

    def dfs(node: _Node, prefix: tuple[int, ...], traces: tuple) -> None:
        key = traces
        if best[0] is not None:
            bk = best[0][0][:len(key)]
            if key > bk:
                return
        if node.is_discrete():
            cand = (key, _certificate(g, col, node.lab))
            if best[0] is None or cand < best[0]:
                best[0] = cand
                best[1] = node.lab[:]
            return
        t = node.target_cell()
        stab = stabilizer(prefix)
        done: set[int] = set()
        for w in sorted(node.cell(t)):
            if w in done:
                continue
            done.update(stab.orbit(w))
            child = ref.individualize(node, w)
            dfs(child, prefix + (w,), traces + (tuple(child.trace),))

    root = ref.root()
    dfs(root, (), (tuple(root.trace),))
    return best[1], best[0][1]


def canonical_form(g: Graph) -> Graph:
    lab, _ = canonical_labelling(g)
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return g.relabel(pos)


def find_isomorphism(g: Graph, h: Graph,
                     g_colouring: Sequence[int] | None = None,
                     h_colouring: Sequence[int] | None = None) -> Perm | None:
    """A map ``phi`` with ``phi[v]`` the image in ``h`` of vertex ``v`` of ``g``, or ``None``.

    Colourings, when given, must be preserved value for value.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    gc = list(g_colouring) if g_colouring is not None else [0] * g.n
    hc = list(h_colouring) if h_colouring is not None else [0] * h.n
    if sorted(gc) != sorted(hc):
        return None
    lab_g, cert_g = canonical_labelling(g, gc)
    lab_h, cert_h = canonical_labelling(h, hc)
    if cert_g != cert_h:
        return None
    phi = [0] * g.n
    for a, b in zip(lab_g, lab_h):
        phi[a] = b
    return tuple(phi)


def is_isomorphic(g: Graph, h: Graph) -> Perm | None:
    return find_isomorphism(g, h)


__all__ = [
    "SearchBudgetExceeded",
    "SearchStats",
    "automorphism_group",
    "canonical_form",
    "canonical_labelling",
    "find_isomorphism",
    "inverse",
    "is_isomorphic",
]
