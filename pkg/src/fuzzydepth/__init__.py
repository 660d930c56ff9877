"""Depth statistics for fuzzy data.

Fuzzy sets with compact convex levels are represented either by interval
endpoints on a breakpoint grid (dimension 1) or by support values on a
direction x alpha grid (dimension 2).  On top of the arithmetic this package
provides the level-wise metrics d_r, the support-based metrics rho_r and the
mid/spread metrics d_r_theta, five sample depth functions, and checkers for
the usual depth axioms (affine invariance, maximality at a symmetry center,
monotone decay along rays, vanishing at infinity).
"""

from .axioms import (
    AxiomVerdict,
    check_p1,
    check_p1_star,
    check_p2,
    check_p3a,
    check_p3b,
    check_p4a,
    check_p4b,
    combo_collinear_triples,
    search_p3b_violation,
    transform_frv,
    transform_set,
)
from .dataset import (
    DatasetRecord,
    emit_dataset,
    parse_dataset,
    records_frv,
    trees_like_records,
)
from .depths import (
    DepthConfig,
    DepthReport,
    depth_table,
    location_depth,
    location_raised_depth,
    natural_depth,
    natural_raised_depth,
    outlyingness,
    projection_depth,
)
from .empirical import (
    EmpiricalFRV,
    MedianInterval,
    make_frv,
    sign_flip_symmetric_frv,
    support_marginal,
    weighted_mad,
    weighted_median,
)
from .exceptions import (
    DimensionMismatch,
    EmptyInput,
    EmptySample,
    FuzzyDepthError,
    GridMismatch,
    InvalidPerturbation,
    OrderViolation,
    OutOfRange,
    ParseError,
    SingularMatrix,
)
from .fuzzyset import (
    DEFAULT_N_ALPHA,
    DEFAULT_N_DIR,
    DirectionGrid,
    GridFuzzySet,
    LevelFuzzySet,
    add,
    convex_combo,
    crisp_interval,
    crisp_point,
    grid_crisp_point,
    grid_from_support,
    grid_zonotope,
    level,
    make_trapezoid,
    matrix_transform,
    merge_alphas,
    mid,
    scale,
    spr,
    support,
    uniform_alphas,
)
from .metrics import (
    MetricSpec,
    hausdorff,
    metric_d_r,
    metric_d_r_theta,
    metric_rho_r,
)
from .report import emit_report, emit_svg, format_table
from .verification import VerifyCase, build_cases, format_rows, run_suite

__version__ = "0.1.0"

__all__ = [
    "AxiomVerdict",
    "DEFAULT_N_ALPHA",
    "DEFAULT_N_DIR",
    "DatasetRecord",
    "DepthConfig",
    "DepthReport",
    "DimensionMismatch",
    "DirectionGrid",
    "EmpiricalFRV",
    "EmptyInput",
    "EmptySample",
    "FuzzyDepthError",
    "GridFuzzySet",
    "GridMismatch",
    "InvalidPerturbation",
    "LevelFuzzySet",
    "MedianInterval",
    "MetricSpec",
    "OrderViolation",
    "OutOfRange",
    "ParseError",
    "SingularMatrix",
    "VerifyCase",
    "add",
    "build_cases",
    "check_p1",
    "check_p1_star",
    "check_p2",
    "check_p3a",
    "check_p3b",
    "check_p4a",
    "check_p4b",
    "combo_collinear_triples",
    "convex_combo",
    "crisp_interval",
    "crisp_point",
    "depth_table",
    "emit_dataset",
    "emit_report",
    "emit_svg",
    "format_rows",
    "format_table",
    "grid_crisp_point",
    "grid_from_support",
    "grid_zonotope",
    "hausdorff",
    "level",
    "location_depth",
    "location_raised_depth",
    "make_frv",
    "make_trapezoid",
    "matrix_transform",
    "merge_alphas",
    "metric_d_r",
    "metric_d_r_theta",
    "metric_rho_r",
    "mid",
    "natural_depth",
    "natural_raised_depth",
    "outlyingness",
    "parse_dataset",
    "projection_depth",
    "records_frv",
    "run_suite",
    "scale",
    "search_p3b_violation",
    "sign_flip_symmetric_frv",
    "spr",
    "support",
    "support_marginal",
    "transform_frv",
    "transform_set",
    "trees_like_records",
    "uniform_alphas",
    "weighted_mad",
    "weighted_median",
]
