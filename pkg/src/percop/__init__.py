"""Exact Cops and Robber solving on periodic temporal graphs."""

from .graphs import (
    Graph,
    Retraction,
    check_retraction,
    compose,
    dismantle,
    domination_number,
    girth,
    radius,
    spanning_tree_cover,
)
from .periodic import (
    Arena,
    PeriodicGraph,
    build_arena,
    constant,
    footprint,
    foremost_journey,
    induced,
    is_temporally_connected,
    pad,
)
from .corners import CornerWitness, find_k_temporal_corners, find_temporal_corners
from .solver import (
    BudgetError,
    CopPolicy,
    SolveResult,
    TripleResult,
    cop_number,
    ctmax_bounded,
    extract_trace,
    is_k_copwin,
    solve_cop_number,
    static_cop_number,
    triple,
    verify_policy,
)
from .treewidth import TreeDecomposition, bag_strategy, exact_treewidth, smooth

__all__ = [
    "Arena",
    "BudgetError",
    "CopPolicy",
    "CornerWitness",
    "Graph",
    "PeriodicGraph",
    "Retraction",
    "SolveResult",
    "TreeDecomposition",
    "TripleResult",
    "bag_strategy",
    "build_arena",
    "check_retraction",
    "compose",
    "constant",
    "cop_number",
    "ctmax_bounded",
    "dismantle",
    "domination_number",
    "exact_treewidth",
    "extract_trace",
    "find_k_temporal_corners",
    "find_temporal_corners",
    "footprint",
    "foremost_journey",
    "girth",
    "induced",
    "is_k_copwin",
    "is_temporally_connected",
    "pad",
    "radius",
    "smooth",
    "solve_cop_number",
    "spanning_tree_cover",
    "static_cop_number",
    "triple",
    "verify_policy",
]
