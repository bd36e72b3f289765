"""Spanning trees that keep receiver interference low.

Exact integer geometry, the receiver-interference model, grid-graph
Hamilton-path machinery, the gadget reduction tying the two together,
and exact/heuristic min-max interference solvers.
"""

from .geometry import Point, in_closed_disk, sq_dist
from .gridgraph import (
    GridGraph,
    hamilton_path,
    has_isolated_vertex,
    induced_edges,
    is_hamilton_path,
    max_degree,
)
from .model import (
    InterferenceProfile,
    InvalidTreeError,
    NodeRole,
    NodeSet,
    SpanningTree,
    interference,
    max_interference,
    radii_from_forest,
    radii_from_tree,
    symmetric_comm_graph,
    tree_violation,
    validate_tree,
)
from .reduction import (
    GadgetSet,
    LemmaViolation,
    ReductionError,
    build_gadgets,
    cross_gadget_violations,
    hamilton_from_tree,
    tree_from_hamilton_path,
)
from .solvers import (
    BUDGET_EXHAUSTED,
    SearchBudget,
    SolveResult,
    decide_interference_le,
    emst_tree,
    local_search,
    minmax_bnb,
    minmax_exhaustive,
)

__version__ = "0.1.0"
