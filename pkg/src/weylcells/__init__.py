"""Automata and Kazhdan-Lusztig cells from extended strip arrangements.

Alcoves of an affine Weyl group are tracked by exact integer strip
vectors; clamping them gives the regions of an extended arrangement,
whose one-step transitions form a finite automaton recognizing the
reduced words of the group.  Cells computed from Kazhdan-Lusztig
polynomials on a ball are matched against region sets, giving each
cell a regular language of reduced words once the match is exact.
"""

from .rootsystem import RootSystem, build_root_system, cartan_matrix
from .alcoves import (
    Ball,
    Element,
    ball,
    bruhat_leq,
    evaluate_word,
    identity_element,
    inverse,
    is_reduced,
    left_descents,
    length,
    reduced_word,
    right_descents,
    right_multiply,
)
from .arrangement import (
    ArrangementSpec,
    Region,
    StarReport,
    enumerate_regions,
    region_of,
    transition,
    verify_star,
)
from .automaton import (
    Automaton,
    accepts,
    count_words,
    enumerate_words,
    from_arrangement,
    from_json,
    minimize,
    restrict_accepting,
    reverse_language,
    to_dot,
    to_json,
    union,
)
from .kl import (
    CellDecomposition,
    KLTable,
    WGraph,
    cells,
    cells_stabilized,
    join,
    kl_table,
    two_sided_cells,
    w_graph,
)
from .cellregions import (
    CellRegionReport,
    PresetCheckReport,
    build_cell_automaton,
    cell_regions,
    check_short_long_preset,
    minimal_uniform_level,
    report_json,
    right_cell_automaton,
    stable_cell_reports,
    two_sided_automaton,
)
from .drawing import FigureSummary, draw_arrangement

__version__ = "0.1.0"

__all__ = [
    "ArrangementSpec",
    "Automaton",
    "Ball",
    "CellDecomposition",
    "CellRegionReport",
    "Element",
    "FigureSummary",
    "KLTable",
    "PresetCheckReport",
    "Region",
    "RootSystem",
    "StarReport",
    "WGraph",
    "accepts",
    "ball",
    "bruhat_leq",
    "build_cell_automaton",
    "build_root_system",
    "cartan_matrix",
    "cell_regions",
    "cells",
    "cells_stabilized",
    "check_short_long_preset",
    "count_words",
    "draw_arrangement",
    "enumerate_regions",
    "enumerate_words",
    "evaluate_word",
    "from_arrangement",
    "from_json",
    "identity_element",
    "inverse",
    "is_reduced",
    "join",
    "kl_table",
    "left_descents",
    "length",
    "minimal_uniform_level",
    "minimize",
    "reduced_word",
    "region_of",
    "report_json",
    "restrict_accepting",
    "reverse_language",
    "right_cell_automaton",
    "right_descents",
    "right_multiply",
    "stable_cell_reports",
    "to_dot",
    "to_json",
    "transition",
    "two_sided_automaton",
    "two_sided_cells",
    "union",
    "verify_star",
    "w_graph",
]
