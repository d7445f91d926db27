"""Permutations as image tuples and permutation groups with stabilizer chains.

A permutation ``p`` maps ``x`` to ``p[x]``. ``compose(f, g)`` is ``f o g``
(apply ``g`` first). Groups carry a deterministic Schreier-Sims chain: the
same generators and base prefix always give the same chain.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(f: Perm, g: Perm) -> Perm:
    return tuple(f[x] for x in g)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def support(p: Sequence[int]) -> list[int]:
    return [i for i, x in enumerate(p) if i != x]


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for s in range(len(p)):
        if seen[s]:
            continue
        k = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def orbit_partition(n: int, generators: Iterable[Sequence[int]]) -> list[list[int]]:
    """Orbits on ``0..n-1`` as sorted lists ordered by least element."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return sorted(blocks.values())


def _orbit_transversal(point: int, gens: Sequence[Perm], n: int) -> dict[int, Perm]:
    trans = {point: identity(n)}
    frontier = [point]
    while frontier:
        nxt = []
        for beta in frontier:
            u = trans[beta]
            for s in gens:
                gamma = s[beta]
                if gamma not in trans:
                    trans[gamma] = compose(s, u)
                    nxt.append(gamma)
        frontier = nxt
    return trans


class PermGroup:
    """Permutation group on ``0..degree-1`` with a stabilizer chain.

    ``base[i]`` has basic orbit ``transversals[i].keys()``; ``strong[i]``
    generates the pointwise stabilizer of ``base[:i]``.
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = (), base: Sequence[int] = ()):
        gens: list[Perm] = []
        seen = set()
        for g in generators:
            t = tuple(g)
            if len(t) != degree:
                raise ValueError(f"generator of length {len(t)} for degree {degree}")
            if not is_identity(t) and t not in seen:
                seen.add(t)
                gens.append(t)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._build(list(dict.fromkeys(base)))

    # -- chain construction ----------------------------------------------

    def _build(self, base: list[int]) -> None:
        n = self.degree
        gens = list(self.generators)
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(next(i for i in range(n) if g[i] != i))
        strong: list[list[Perm]] = []
        for i in range(len(base)):
            prefix = base[:i]
            strong.append([g for g in gens if all(g[b] == b for b in prefix)])
        trans = [_orbit_transversal(base[i], strong[i], n) for i in range(len(base))]

        def sift(h: Perm, start: int) -> tuple[Perm, int]:
            for level in range(start, len(base)):
                beta = h[base[level]]
                u = trans[level].get(beta)
                if u is None:
                    return h, level
                h = compose(inverse(u), h)
            return h, len(base)

        i = len(base) - 1
        while i >= 0:
            restart = False
            for beta in list(trans[i]):
                u_beta = trans[i][beta]
                for s in strong[i]:
                    gamma = s[beta]
                    sb = compose(s, u_beta)
                    u_gamma = trans[i][gamma]
                    if sb == u_gamma:
                        continue
                    h = compose(inverse(u_gamma), sb)
                    residue, j = sift(h, i + 1)
                    if is_identity(residue):
                        continue
                    if j == len(base):
                        base.append(next(x for x in range(n) if residue[x] != x))
                        strong.append([])
                        trans.append({})
                    for level in range(i + 1, j + 1):
                        strong[level].append(residue)
                        trans[level] = _orbit_transversal(base[level], strong[level], n)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1
        self.base: tuple[int, ...] = tuple(base)
        self.strong: list[list[Perm]] = strong
        self.transversals: list[dict[int, Perm]] = trans

    # -- queries ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()}, gens={len(self.generators)})"

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def is_trivial(self) -> bool:
        return not self.generators

    def basic_orbits(self) -> list[list[int]]:
        return [sorted(t) for t in self.transversals]

    def sift(self, p: Sequence[int]) -> Perm:
        h = tuple(p)
        for level, b in enumerate(self.base):
            u = self.transversals[level].get(h[b])
            if u is None:
                return h
            h = compose(inverse(u), h)
        return h

    def contains(self, p: Sequence[int]) -> bool:
        return len(p) == self.degree and is_identity(self.sift(p))

    __contains__ = contains

    def orbit(self, point: int) -> list[int]:
        return sorted(_orbit_transversal(point, self.generators, self.degree))

    def orbits(self) -> list[list[int]]:
        return orbit_partition(self.degree, self.generators)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def with_base(self, prefix: Sequence[int]) -> PermGroup:
        """Same group, chain rebuilt so the base starts with ``prefix``."""
        if list(self.base[:len(prefix)]) == list(prefix):
            return self
        return PermGroup(self.degree, self.generators, prefix)

    def pointwise_stabilizer(self, points: Iterable[int]) -> PermGroup:
        pts = list(dict.fromkeys(points))
        if not pts:
            return self
        chained = PermGroup(self.degree, self.generators, pts)
        k = len(pts)
        gens = chained.strong[k] if k < len(chained.base) else []
        return PermGroup(self.degree, gens, chained.base[k:])

    def stabilizer(self, point: int) -> PermGroup:
        return self.pointwise_stabilizer([point])

    def elements(self, limit: int = 1_000_000) -> Iterator[Perm]:
        """Every element, via the chain (raises if the order exceeds ``limit``)."""
        if self.order() > limit:
            raise ValueError(f"group order {self.order()} exceeds enumeration limit {limit}")
        levels = [list(t.values()) for t in self.transversals]

        def walk(level: int, acc: Perm) -> Iterator[Perm]:
            if level == len(levels):
                yield acc
                return
            for u in levels[level]:
                yield from walk(level + 1, compose(acc, u))

        yield from walk(0, identity(self.degree))

    def induced_action(self, points: Sequence[Sequence[int]], key=None) -> PermGroup:
        """Action on a family of point tuples (e.g. edges as sorted pairs).

        ``key`` canonicalises an image tuple; the default sorts it, which suits
        unordered sets such as edges.
        """
        key = key or (lambda t: tuple(sorted(t)))
        index = {key(p): i for i, p in enumerate(points)}
        gens = []
        for g in self.generators:
            gens.append(tuple(index[key(tuple(g[x] for x in p))] for p in points))
        return PermGroup(len(points), gens)
