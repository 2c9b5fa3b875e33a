"""Minimum-cost landmark sets for vertex-weighted trees.

A landmark set L (for the two-separator rule used throughout) is a vertex set
such that every pair of distinct vertices outside L is at distinct distances
from at least two members of L.  ``solve`` finds a cheapest one in linear
time; ``verify_landmark`` and ``brute_min`` are independent definition-level
checks for it.
"""

from .fileformat import (
    TreeFileError,
    emit_tree_text,
    parse_tree_file,
    parse_tree_text,
    result_document,
    result_to_json,
)
from .generators import make_tree, prufer_decode
from .legs import (
    LocalSetAssignment,
    SolutionType,
    TypedLegSolution,
    VertexNotOnLeg,
    is_local_set,
    is_thrifty,
    min_cost_solutions,
    type_of_solution,
)
from .oracle import (
    ModelKind,
    NL2,
    NotALandmarkSet,
    TooLarge,
    Verdict,
    brute_min,
    is_minimal_inclusion,
    verify_landmark,
)
from .solver import LandmarkResult, check_by_distances, solve
from .topology import (
    CaseTag,
    GLeg,
    InternalInvariantViolation,
    LegKind,
    Topology,
    VertexClass,
    classify,
)
from .tree import (
    IndexOutOfRange,
    NegativeCost,
    NotATree,
    WeightedTree,
    bfs_distances,
    build_tree,
    total_cost,
)

__version__ = "1.0.0"

__all__ = [
    "CaseTag",
    "GLeg",
    "IndexOutOfRange",
    "InternalInvariantViolation",
    "LandmarkResult",
    "LegKind",
    "LocalSetAssignment",
    "ModelKind",
    "NL2",
    "NegativeCost",
    "NotALandmarkSet",
    "NotATree",
    "SolutionType",
    "TooLarge",
    "Topology",
    "TreeFileError",
    "TypedLegSolution",
    "Verdict",
    "VertexClass",
    "VertexNotOnLeg",
    "WeightedTree",
    "bfs_distances",
    "brute_min",
    "build_tree",
    "check_by_distances",
    "classify",
    "emit_tree_text",
    "is_local_set",
    "is_minimal_inclusion",
    "is_thrifty",
    "make_tree",
    "min_cost_solutions",
    "parse_tree_file",
    "parse_tree_text",
    "prufer_decode",
    "result_document",
    "result_to_json",
    "solve",
    "total_cost",
    "type_of_solution",
    "verify_landmark",
]
