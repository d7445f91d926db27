"""Master dispatcher: a certificate for any connected 4-valent vertex-transitive graph."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..distinguishing import distinguishing_number
from ..formats import to_graph6
from ..graph import Graph, is_connected
from ..symmetry import automorphism_group, edge_types, is_edge_transitive, is_vertex_transitive
from .arc_transitive import colour_arc_transitive
from .common import ConstructionTrace, Exceptional, Outcome, PreconditionError
from .type1 import colour_type1
from .type2 import colour_half_arc_transitive, colour_type2_not_edge_transitive

EXPECTED_D = {"K5": 5, "K44_W4": 5, "K3boxK3": 3, "K4boxK2": 3, "K5xK2": 3, "Wn": 3}


@dataclass
class Certificate:
    """Verdict for one graph: an exceptional family with its ``D``, or a verified 2-colouring."""

    graph6: str
    valency: int
    vertex_transitive: bool
    edge_type_partition: tuple[int, ...]
    trace: ConstructionTrace
    exceptional: Exceptional | None
    D: int
    colouring: tuple[int, ...] | None
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.exceptional is None and self.trace.verified

    @property
    def branch(self) -> str | None:
        return self.trace.branch

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "graph6": self.graph6,
            "valency": self.valency,
            "vertex_transitive": self.vertex_transitive,
            "edge_type_partition": list(self.edge_type_partition),
            "branch_trace": self.trace.as_dict(),
            "exceptional": self.exceptional.name if self.exceptional else None,
            "D": self.D,
            "colouring": list(self.colouring) if self.colouring is not None else None,
            "verified": self.verified,
        }
        if timings:
            out["timings"] = dict(self.timings)
        return out


def _dispatch(g: Graph, part: tuple[int, ...], trace: ConstructionTrace) -> Outcome:
    if 1 in part:
        return colour_type1(g, trace)
    if part == (2, 2):
        if is_edge_transitive(g):
            return colour_half_arc_transitive(g, trace)
        return colour_type2_not_edge_transitive(g, trace)
    if part == (4,):
        return colour_arc_transitive(g, trace)
    raise PreconditionError("edge_types", f"unexpected edge-type partition {part}")


def distinguishing_colouring_4vt(g: Graph, budget: int | None = None) -> Certificate:
    """Certificate for a connected 4-valent vertex-transitive graph.

    Exceptional ``D`` values come from the exact search.
    """
    if not is_connected(g):
        raise PreconditionError("connected", "graph is not connected")
    if g.regular_degree() != 4:
        raise PreconditionError("valency", "graph is not 4-regular")
    if not is_vertex_transitive(g):
        raise PreconditionError("vertex_transitive", "graph is not vertex-transitive")
    timings = {}
    start = time.perf_counter()
    part = edge_types(g).vertex_partition
    trace = ConstructionTrace()
    outcome = _dispatch(g, part, trace)
    timings["construct"] = time.perf_counter() - start
    if outcome.exceptional is not None:
        start = time.perf_counter()
        d, _ = distinguishing_number(g, k_max=6, budget=budget)
        timings["exact_D"] = time.perf_counter() - start
    else:
        if automorphism_group(g).is_trivial():
            raise PreconditionError("vertex_transitive", "trivial automorphism group")
        d = 2
    return Certificate(to_graph6(g), 4, True, part, trace, outcome.exceptional, d, outcome.colouring, timings)
