"""Pairwise-comparisons ranking workbench.

Derives priority vectors from reciprocal judgment matrices via the principal
eigenvector, quantifies input quality (Saaty and Koczkodaj inconsistency
indices) and output quality (local/global ranking discrepancy), evaluates
the bound and order-preservation theorems tying them together, and proposes
inconsistency-reducing judgment revisions.
"""

from .analysis import AnalysisReport, analyze, report_to_dict
from .bounds import (
    BoundsReport,
    CopCounts,
    CopReport,
    PoipResult,
    PopResult,
    bounds_report,
    cop_counts,
    cop_report,
    discrepancy_bound,
    eigenvalue_bounds,
    kappa_recommendation,
    poip_check,
    pop_check,
    saaty_bounds,
)
from .discrepancy import (
    DiscrepancyReport,
    global_discrepancy,
    local_discrepancy,
    ranking_error,
)
from .eigen import ConvergenceError, EigenPair, Ranking, principal_eigenpair, rank_ev
from .inconsistency import (
    InconsistencyReport,
    inconsistency_report,
    koczkodaj_index,
    saaty_index,
)
from .matrix import (
    FULOP_CONSTANT,
    MatrixValidationError,
    PCMatrix,
    ScaleReport,
    Triad,
    UndefinedIndexError,
    complete_reciprocal,
    is_consistent,
    parse_matrix,
    scale_check,
    triads,
)
from .reduction import (
    AlreadyConsistentError,
    ReductionResult,
    Revision,
    apply_revision,
    reduce,
    suggest_revision,
)

__version__ = "0.1.0"

__all__ = [
    "AlreadyConsistentError",
    "AnalysisReport",
    "BoundsReport",
    "ConvergenceError",
    "CopCounts",
    "CopReport",
    "DiscrepancyReport",
    "EigenPair",
    "FULOP_CONSTANT",
    "InconsistencyReport",
    "MatrixValidationError",
    "PCMatrix",
    "PoipResult",
    "PopResult",
    "Ranking",
    "ReductionResult",
    "Revision",
    "ScaleReport",
    "Triad",
    "UndefinedIndexError",
    "analyze",
    "apply_revision",
    "bounds_report",
    "complete_reciprocal",
    "cop_counts",
    "cop_report",
    "discrepancy_bound",
    "eigenvalue_bounds",
    "global_discrepancy",
    "inconsistency_report",
    "is_consistent",
    "kappa_recommendation",
    "koczkodaj_index",
    "local_discrepancy",
    "parse_matrix",
    "poip_check",
    "pop_check",
    "principal_eigenpair",
    "rank_ev",
    "ranking_error",
    "reduce",
    "report_to_dict",
    "saaty_bounds",
    "saaty_index",
    "scale_check",
    "suggest_revision",
    "triads",
]
