"""Shared result types and helpers for the colouring constructors.

Colourings use ``1`` for black and ``0`` for white.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from ..distinguishing import default_budget, is_distinguishing, search_distinguishing
from ..graph import Graph, bfs_order, induced_subgraph
from ..perm import PermGroup
from ..search import automorphism_group as coloured_automorphism_group
from ..search import find_isomorphism
from ..symmetry import automorphism_group

BLACK = 1
WHITE = 0


class PreconditionError(ValueError):
    """An input does not meet a constructor's hypotheses; ``clause`` names the failed one."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class InvariantViolation(RuntimeError):
    """A structural claim the construction relies on failed on this input."""


@dataclass(frozen=True)
class TraceStep:
    rule: str
    anchor: str
    coloured: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {"rule": self.rule, "anchor": self.anchor, "coloured": list(self.coloured)}


@dataclass
class ConstructionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    verified: bool = False

    def add(self, rule: str, anchor: str, coloured: Sequence[int] = ()) -> None:
        self.steps.append(TraceStep(rule, anchor, tuple(coloured)))

    @property
    def branch(self) -> str | None:
        """The most specific branch rule recorded (the last step tagged ``branch:``)."""
        for step in reversed(self.steps):
            if step.rule.startswith("branch:"):
                return step.rule[len("branch:"):]
        return None

    def branches(self) -> list[str]:
        return [s.rule[len("branch:"):] for s in self.steps if s.rule.startswith("branch:")]

    def as_dict(self) -> dict:
        return {"steps": [s.as_dict() for s in self.steps], "verified": self.verified}


@dataclass(frozen=True)
class Exceptional:
    """One of the exceptional graphs; ``param`` is ``n`` for wreath graphs."""

    family: str
    param: int | None = None

    @property
    def name(self) -> str:
        return f"W{self.param}" if self.family == "Wn" else self.family


@dataclass
class Outcome:
    """Result of a constructor: a verified colouring or an exceptional verdict."""

    colouring: tuple[int, ...] | None
    exceptional: Exceptional | None
    trace: ConstructionTrace

    @property
    def branch(self) -> str | None:
        return self.trace.branch


def branch(trace: ConstructionTrace, name: str, anchor: str) -> None:
    trace.add(f"branch:{name}", anchor)


def verified(g: Graph, colouring: Sequence[int], trace: ConstructionTrace) -> Outcome:
    """Gate every emitted colouring through :func:`is_distinguishing`."""
    cols = tuple(colouring)
    if len(cols) != g.n or any(c not in (BLACK, WHITE) for c in cols):
        raise InvariantViolation("constructed colouring is not a total 2-colouring")
    verdict = is_distinguishing(g, cols)
    if not verdict:
        raise InvariantViolation(f"constructed colouring is preserved by {verdict.witness}")
    trace.verified = True
    trace.add("verify", "only the identity preserves the colouring", ())
    return Outcome(cols, None, trace)


def exceptional(family: str, trace: ConstructionTrace, param: int | None = None) -> Outcome:
    trace.add("exceptional", family if param is None else f"{family}({param})")
    return Outcome(None, Exceptional(family, param), trace)


def two_colouring_by_search(g: Graph, group: PermGroup | None = None, budget: int | None = None) -> list[int] | None:
    """Least distinguishing 2-colouring from the exact search, or ``None``."""
    group = group or automorphism_group(g)
    if group.is_trivial():
        return [WHITE] * g.n
    budget = default_budget() if budget is None else budget
    return search_distinguishing(group, 2, bfs_order(g, 0), budget)


def rooted_isomorphism(g: Graph, root_g: int, h: Graph, root_h: int) -> tuple[int, ...] | None:
    """Isomorphism ``g -> h`` sending ``root_g`` to ``root_h``."""
    cg = [1 if v == root_g else 0 for v in range(g.n)]
    ch = [1 if v == root_h else 0 for v in range(h.n)]
    return find_isomorphism(g, h, cg, ch)


def stabilizer_is_trivial(g: Graph, colouring: Sequence[int], fixed: Sequence[int]) -> bool:
    """Whether only the identity fixes every vertex of ``fixed`` and preserves ``colouring``."""
    marks = {v: i for i, v in enumerate(fixed)}
    cols = [2 * (len(fixed) + 1) * colouring[v] + (marks[v] + 1 if v in marks else 0) for v in range(g.n)]
    return coloured_automorphism_group(g, cols).is_trivial()


def induced(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, vertices)


def recognize_wreath(g: Graph) -> int | None:
    """``n`` if ``g`` is the wreath graph ``W_n`` (``n >= 3``), else ``None``.

    Fibres are the classes of vertices with identical neighbourhoods; ``W_n``
    has ``n`` fibres of size 2 whose quotient is the cycle ``C_n``. ``W_4`` is
    ``K_{4,4}``, where the fibres merge into the two sides.
    """
    if g.n < 6 or g.regular_degree() != 4:
        return None
    classes: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        classes.setdefault(tuple(sorted(g.adjacency[v])), []).append(v)
    fibres = sorted(classes.values())
    if g.n == 8 and len(fibres) == 2 and all(len(f) == 4 for f in fibres):
        return 4 if all(not g.has_edge(u, v) for f in fibres for u in f for v in f) else None
    if any(len(f) != 2 for f in fibres):
        return None
    owner = {v: i for i, f in enumerate(fibres) for v in f}
    m = len(fibres)
    quotient_adj: list[set[int]] = [set() for _ in range(m)]
    for u, v in g.edges:
        if owner[u] == owner[v]:
            return None
        quotient_adj[owner[u]].add(owner[v])
        quotient_adj[owner[v]].add(owner[u])
    if any(len(a) != 2 for a in quotient_adj):
        return None
    # connected 2-regular quotient on m vertices is C_m
    seen, stack = {0}, [0]
    while stack:
        for w in quotient_adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return m if len(seen) == m and m >= 3 else None
