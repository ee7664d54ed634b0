"""Exact computer algebra for polynomial rank, special forms, and
expansion experiments over finite sets."""

__version__ = "0.1.0"

from .expansion import (
    BudgetExceededError,
    ExpansionReport,
    SetSpec,
    degenerate_demo,
    expansion_report,
    generate_set,
    image_size,
    image_values,
    theoretical_exponent,
)
from .incidence import IncidenceInstance, bound_ratios, build_instance, verify_counts
from .moment import (
    MomentInstance,
    VolumeSet,
    det_m,
    det_m_sign,
    distinct_volumes,
    matrix_m,
    moment_instance,
    moment_summary,
    symmetric_polys,
    vandermonde_matrix,
    verify_rank,
    volume_expansion_report,
    volume_poly,
)
from .parsing import ParseError, parse
from .poly import (
    NEG_INF,
    Polynomial,
    RationalFunction,
    VarSet,
    embed,
    exact_div,
    project,
)
from .rank import (
    CoefficientMap,
    PolyMatrix,
    RankReport,
    Witness,
    coefficient_map,
    generic_rank_exact,
    generic_rank_randomized,
    jacobian,
    rank,
    rank_in,
)
from .reduction import (
    ReductionError,
    ReductionResult,
    grid_reduce,
    reduce,
    select_independent_columns,
)
from .special import SpecialFormVerdict, depends_on_all, is_special, ratio_independent_of, ratio_separated

__all__ = [
    "BudgetExceededError",
    "CoefficientMap",
    "ExpansionReport",
    "IncidenceInstance",
    "MomentInstance",
    "NEG_INF",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "RankReport",
    "RationalFunction",
    "ReductionError",
    "ReductionResult",
    "SetSpec",
    "SpecialFormVerdict",
    "VarSet",
    "VolumeSet",
    "Witness",
    "bound_ratios",
    "build_instance",
    "coefficient_map",
    "degenerate_demo",
    "depends_on_all",
    "det_m",
    "det_m_sign",
    "distinct_volumes",
    "embed",
    "exact_div",
    "expansion_report",
    "generate_set",
    "generic_rank_exact",
    "generic_rank_randomized",
    "grid_reduce",
    "image_size",
    "image_values",
    "is_special",
    "jacobian",
    "matrix_m",
    "moment_instance",
    "moment_summary",
    "parse",
    "project",
    "rank",
    "rank_in",
    "ratio_independent_of",
    "ratio_separated",
    "reduce",
    "select_independent_columns",
    "symmetric_polys",
    "theoretical_exponent",
    "vandermonde_matrix",
    "verify_counts",
    "verify_rank",
    "volume_expansion_report",
    "volume_poly",
]
