"""Exact Hausdorff measures on finite metric spaces under competing covering conventions."""

__version__ = "0.1.0"

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    DuplicatePoint,
    HausdorffError,
    MetricViolation,
    OutOfRange,
    PolicyMismatch,
    TooLarge,
)
from .extreal import INF, ext_equal, format_ext, omega_sum, parse_ext
from .metric import (
    DiameterBound,
    FiniteMetricSpace,
    PointSet,
    admissible_sets,
    build_space,
    diameter,
    from_points_euclidean,
)
from .gauge import GaugePolicy, GaugeVariant, alpha, gamma, zeta
from .cover import (
    CoverInstance,
    CoverSolution,
    oracle_brute_force,
    solve_branch_and_bound,
    solve_exact_dp,
    solve_greedy,
)
from .measure import (
    CONTRA_EMPTY,
    FEDERER,
    HALMOS,
    PAPER_MODIFIED,
    Cardinality,
    CoveringConvention,
    Elements,
    H0Override,
    MeasureResult,
    compare_conventions,
    contra_nonempty,
    h_m,
    h_m_delta,
)
from .fractal import cantor_level, dimension_estimate, endpoints_space, natural_cover_sum, sweep

__all__ = [
    "CONTRA_EMPTY",
    "Cardinality",
    "CoverInstance",
    "CoverSolution",
    "CoveringConvention",
    "DegenerateInput",
    "DiameterBound",
    "DimensionMismatch",
    "DuplicatePoint",
    "Elements",
    "FEDERER",
    "FiniteMetricSpace",
    "GaugePolicy",
    "GaugeVariant",
    "H0Override",
    "HALMOS",
    "HausdorffError",
    "INF",
    "MeasureResult",
    "MetricViolation",
    "OutOfRange",
    "PAPER_MODIFIED",
    "PointSet",
    "PolicyMismatch",
    "TooLarge",
    "admissible_sets",
    "alpha",
    "build_space",
    "cantor_level",
    "compare_conventions",
    "contra_nonempty",
    "diameter",
    "dimension_estimate",
    "endpoints_space",
    "ext_equal",
    "format_ext",
    "from_points_euclidean",
    "gamma",
    "h_m",
    "h_m_delta",
    "natural_cover_sum",
    "omega_sum",
    "oracle_brute_force",
    "parse_ext",
    "solve_branch_and_bound",
    "solve_exact_dp",
    "solve_greedy",
    "sweep",
    "zeta",
]
