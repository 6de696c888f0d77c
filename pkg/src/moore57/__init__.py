"""Exact-integer workbench for the degree-57 Moore graph feasibility analysis.

Rebuilds the triple-intersection block systems of the distance-regular
subgraph with array [55,54,2;1,1,54], enumerates every constrained
non-negative integer solution per block, verifies the grid-geometry
constraints on a rook's-graph oracle, and runs the permutation-system
existence search at small degrees.
"""

from .blocks import (
    BlockSystem,
    apply_symmetry,
    build_system,
    canonical_blocks,
    coefficient_matrix,
    forced_zero_variables,
    is_block_admissible,
    var_index,
    var_triple,
)
from .constraints import ConstraintSet, assemble, x333_value, sporadic_constraints
from .drg import (
    MOORE57_ARRAY,
    IntersectionArray,
    IntersectionNumbers,
    intersection_numbers,
    multiplicities,
)
from .lattice import coefficients_of, expand, null_basis
from .permsearch import (
    PermSystem,
    SearchBudget,
    assemble_moore,
    build_h,
    identity_lift,
    fixed_point_free,
    is_moore,
    search,
    verify_h,
)
from .solver import (
    EnumerationResult,
    block221_report,
    enumerate_block,
    enumerate_solutions,
    particular_solution,
    summary,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSystem",
    "ConstraintSet",
    "EnumerationResult",
    "IntersectionArray",
    "IntersectionNumbers",
    "MOORE57_ARRAY",
    "PermSystem",
    "SearchBudget",
    "apply_symmetry",
    "assemble",
    "assemble_moore",
    "build_h",
    "build_system",
    "canonical_blocks",
    "coefficient_matrix",
    "coefficients_of",
    "identity_lift",
    "block221_report",
    "enumerate_block",
    "enumerate_solutions",
    "expand",
    "fixed_point_free",
    "forced_zero_variables",
    "intersection_numbers",
    "is_block_admissible",
    "is_moore",
    "x333_value",
    "sporadic_constraints",
    "multiplicities",
    "null_basis",
    "particular_solution",
    "search",
    "summary",
    "var_index",
    "var_triple",
    "verify_h",
    "verify_solution",
]
