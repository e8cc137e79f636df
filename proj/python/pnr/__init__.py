"""Numerical ranges of periodic tridiagonal operators."""

from ._pnr import (
    DimensionMismatch,
    DomainError,
    Error,
    NotSelfAdjoint,
    ParseError,
    PeriodSpec,
    build_symbol,
    build_truncation,
    conjecture_matrices,
    hausdorff,
    range_boundary,
    run_checks,
    selfadjoint_interval,
    support_width,
    symbol_union_hull,
    truncation_range,
)

__all__ = [
    "DimensionMismatch",
    "DomainError",
    "Error",
    "NotSelfAdjoint",
    "ParseError",
    "PeriodSpec",
    "build_symbol",
    "build_truncation",
    "conjecture_matrices",
    "hausdorff",
    "range_boundary",
    "run_checks",
    "selfadjoint_interval",
    "support_width",
    "symbol_union_hull",
    "truncation_range",
]
