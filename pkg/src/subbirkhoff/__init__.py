"""Exact decompositions of doubly substochastic matrices into subpermutation matrices."""
from subbirkhoff.completion import (
    CompletionBlocks,
    StructureReport,
    minimal_completion,
    staircase_fill,
    verify_completion_structure,
)
from subbirkhoff.decompose import (
    ConvexCombination,
    DecompositionReport,
    Subpermutation,
    bound,
    caratheodory_reduce,
    decompose_substochastic,
    direct_sum_lift,
    greedy_birkhoff,
    scale_decomposition,
    truncate_and_merge,
    verify_combination,
)
from subbirkhoff.kernels import BACKEND
from subbirkhoff.matrices import (
    Matrix,
    SubstochasticError,
    SubstochasticMatrix,
    line_sums,
    rational_from_text,
    rational_nullspace,
    sigma,
    sub_defect,
    validate_substochastic,
)
from subbirkhoff.structure import (
    NoTotalSupport,
    SupportPattern,
    face_dimension,
    face_dimension_via_rank,
    fully_indecomposable_components,
    has_total_support,
    perfect_matching,
    support_pattern,
)

__version__ = "0.1.0"
