"""Degree-constrained bipartitioning of 4-cycle-free graphs, with certificates."""

from .constructions import PolarityGraph, enumerate_small, er_polarity, named_graph, random_c4_free
from .degeneracy import deficiency_set, f_core, is_degenerate, minimal_good
from .graph import FourCycle, Graph, GraphError, build, common_neighbors, degree_in, find_four_cycle, induced
from .oracle import TightnessInstance, crosscheck, exists_feasible, search_tight_functions, verify_tightness
from .solver import (
    C4Witness,
    Certificate,
    Configuration,
    DegreeViolation,
    DemandPair,
    Diagnostic,
    FeasiblePair,
    FeasiblePartition,
    PartitionState,
    delta_move,
    delta_swap,
    disjoint_cycles,
    extend_pair,
    initial_partition,
    k_way,
    normalize,
    solve,
    solve_with_stats,
    verify_feasible,
    verify_hypotheses,
    weight,
)

__all__ = [
    "C4Witness",
    "Certificate",
    "Configuration",
    "DegreeViolation",
    "DemandPair",
    "Diagnostic",
    "FeasiblePair",
    "FeasiblePartition",
    "FourCycle",
    "Graph",
    "GraphError",
    "PartitionState",
    "PolarityGraph",
    "TightnessInstance",
    "build",
    "common_neighbors",
    "crosscheck",
    "deficiency_set",
    "degree_in",
    "delta_move",
    "delta_swap",
    "disjoint_cycles",
    "enumerate_small",
    "er_polarity",
    "exists_feasible",
    "extend_pair",
    "f_core",
    "find_four_cycle",
    "induced",
    "initial_partition",
    "is_degenerate",
    "k_way",
    "minimal_good",
    "named_graph",
    "normalize",
    "random_c4_free",
    "search_tight_functions",
    "solve",
    "solve_with_stats",
    "verify_feasible",
    "verify_hypotheses",
    "weight",
]

__version__ = "0.1.0"
