"""Coloured flip graphs of triangulated convex polygons."""

from .colouring import (
    ColourScheme,
    ColouredTriangulation,
    FlipError,
    FlipSequence,
    SequenceError,
    apply_sequence,
    coloured_flip,
    count_coloured,
    count_frozen,
    cycle_regions,
    enumerate_coloured,
    flippable_diagonals,
    is_frozen,
    is_single_cycle,
    translate_sequence,
)
from .flipgraph import (
    BudgetExceeded,
    Component,
    FlipGraph,
    build_flip_graph,
    census,
    check_conjecture,
    component_of,
    component_stats,
    eventually_flippable,
    fan_hypercube_dims,
    independent_flippable_sets,
    is_bipartite,
    min_nontrivial_size,
    verify_hypercube,
)
from .polygon import (
    DualTree,
    Triangulation,
    TriangulationError,
    catalan,
    dual_tree,
    enumerate_triangulations,
    fan,
    flip,
    quadrilateral_of,
)
from .signed import (
    colouring_from_valuation,
    decide_equivalence,
    is_alternating,
    signs_from_valuation,
    signs_from_weighting,
    uses_four_colours,
    valuation,
    valuation_from_colouring,
    weighting,
)

__version__ = "0.1.0"
