"""Explicit colourings of a few small graphs that the general constructions rely on.

* ``cycle_of_k33``: a distinguishing colouring of ``C_{n,K33}`` with a unique
  matching edge whose ends are both white;
* ``cage46``: a distinguishing colouring of the (4,6)-cage built around one
  white vertex with four black neighbours;
* ``q3`` and ``petersen``: colourings whose only automorphism fixing a marked
  vertex is the identity (not distinguishing on their own).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..constructions import cage46, cycle_of_k33
from ..graph import Graph
from .common import BLACK, WHITE, PreconditionError, is_distinguishing, stabilizer_is_trivial

FIGURE_CASES = ("cycle_of_k33", "cage46", "q3", "petersen")


@dataclass(frozen=True)
class FigureColouring:
    name: str
    graph: Graph
    colouring: tuple[int, ...]
    root: int | None = None

    def holds(self) -> bool:
        """Distinguishing, or for rooted cases trivial stabilizer of the root."""
        if self.root is None:
            return bool(is_distinguishing(self.graph, self.colouring))
        return stabilizer_is_trivial(self.graph, self.colouring, [self.root])


def cycle_of_k33_colouring(n: int) -> tuple[int, ...]:
    """Every ``Y_j`` is (B, W, B); ``X_j`` is (W, B, B) except ``X_{n-1}`` = (W, W, B).

    Numbering as in :func:`cycle_of_k33`; the only matching edge with two white
    ends is ``X_{n-1}[1] -- Y_0[1]``.
    """
    cols = []
    for j in range(n):
        cols += [WHITE, WHITE, BLACK] if j == n - 1 else [WHITE, BLACK, BLACK]
        cols += [BLACK, WHITE, BLACK]
    return tuple(cols)


def cage46_colouring(g: Graph | None = None, v: int = 0) -> tuple[int, ...]:
    """Colouring of the (4,6)-cage around ``v``.

    Neighbours ``v_a`` (``a = 0..3``) and their further neighbours ``v_ab``
    (``b = 0..2``) are taken in increasing vertex order. ``v`` is white, every
    ``v_a`` is black, ``v_ab`` is black iff ``a < b``; at distance three only
    the common neighbour of ``v_11, v_21`` and that of ``v_11, v_22`` are black.
    """
    g = g or cage46()
    cols = [WHITE] * g.n
    nb = list(g.adjacency[v])
    child = {}
    for a, va in enumerate(nb):
        cols[va] = BLACK
        for b, x in enumerate(w for w in g.adjacency[va] if w != v):
            child[a, b] = x
            if a < b:
                cols[x] = BLACK
    for p, q in (((1, 1), (2, 1)), ((1, 1), (2, 2))):
        common = g.common_neighbours(child[p], child[q]) - set(nb)
        if len(common) != 1:
            raise PreconditionError("cage46", "second-level vertices need exactly one common neighbour")
        cols[next(iter(common))] = BLACK
    return tuple(cols)


def q3_figure() -> FigureColouring:
    """Cube as outer square ``v1..v4`` (0..3) and inner square ``w1..w4`` (4..7) with spokes.

    Black: ``v1, v2, w1..w4``; white: ``v3, v4``; the marked vertex is ``v2``.
    """
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, 4 + i) for i in range(4)]
    cols = (BLACK, BLACK, WHITE, WHITE, BLACK, BLACK, BLACK, BLACK)
    return FigureColouring("q3", Graph(8, edges), cols, root=1)


def petersen_figure() -> FigureColouring:
    """Outer pentagon ``v1..v5`` (0..4), inner pentagram ``w1..w5`` (5..9), spokes ``vi -- wi``.

    Black: ``v2, v5, w1..w5``; white: ``v1, v3, v4``; the marked vertex is ``v2``.
    """
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    cols = (WHITE, BLACK, WHITE, WHITE, BLACK, BLACK, BLACK, BLACK, BLACK, BLACK)
    return FigureColouring("petersen", Graph(10, edges), cols, root=1)


def colour_figure_cases(name: str, n: int = 6) -> FigureColouring:
    """The explicit colouring for ``name`` (one of :data:`FIGURE_CASES`)."""
    if name == "cycle_of_k33":
        return FigureColouring(name, cycle_of_k33(n), cycle_of_k33_colouring(n))
    if name == "cage46":
        g = cage46()
        return FigureColouring(name, g, cage46_colouring(g, 0))
    if name == "q3":
        return q3_figure()
    if name == "petersen":
        return petersen_figure()
    raise PreconditionError("figure", f"unsupported figure case {name!r}; expected one of {FIGURE_CASES}")
