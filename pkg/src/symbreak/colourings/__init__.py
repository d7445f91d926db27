"""Constructive distinguishing 2-colourings of 4-valent vertex-transitive graphs.

Every colouring returned here has been checked with
:func:`symbreak.distinguishing.is_distinguishing`.
"""

from .arc_transitive import colour_arc_transitive, colour_arc_transitive_girth5, find_good_girth_cycle
from .common import (
    BLACK,
    WHITE,
    ConstructionTrace,
    Exceptional,
    InvariantViolation,
    Outcome,
    PreconditionError,
    TraceStep,
    recognize_wreath,
)
from .dispatch import EXPECTED_D, Certificate, distinguishing_colouring_4vt
from .figures import FIGURE_CASES, colour_figure_cases
from .type1 import colour_type1, colour_type1_unique, colour_via_component
from .type2 import (
    colour_half_arc_transitive,
    colour_type2_not_edge_transitive,
    cycle_colour_induction_step,
)

__all__ = [
    "BLACK",
    "EXPECTED_D",
    "FIGURE_CASES",
    "WHITE",
    "Certificate",
    "ConstructionTrace",
    "Exceptional",
    "InvariantViolation",
    "Outcome",
    "PreconditionError",
    "TraceStep",
    "colour_arc_transitive",
    "colour_arc_transitive_girth5",
    "colour_figure_cases",
    "colour_half_arc_transitive",
    "colour_type1",
    "colour_type1_unique",
    "colour_type2_not_edge_transitive",
    "colour_via_component",
    "cycle_colour_induction_step",
    "distinguishing_colouring_4vt",
    "find_good_girth_cycle",
    "recognize_wreath",
]
