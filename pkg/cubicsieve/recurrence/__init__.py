"""
Hankel determinants, chain sequences and both routes to the recurrence coefficients.
"""

from .chain import chain_params, determinant_ratios, gamma_from_chain, ratios_from_minors, s_sequence
from .conjecture import PINNED, verify_conjecture
from .gammas import build_recurrence_table, compare_routes, gamma_direct
from .hankel import bareiss_det, bareiss_minors, cofactor_det, hankel_det, hankel_matrix, leading_minors
from .models import (
    CheckResult,
    ConjectureReport,
    ConjectureSummary,
    ExactOrthogonality,
    GammaRow,
    RecurrenceTable,
    RouteComparison,
    RoutesReport,
)
from .orthogonality import exact_orthogonality

__all__ = [
    "PINNED",
    "CheckResult",
    "ConjectureReport",
    "ConjectureSummary",
    "ExactOrthogonality",
    "GammaRow",
    "RecurrenceTable",
    "RouteComparison",
    "RoutesReport",
    "bareiss_det",
    "bareiss_minors",
    "build_recurrence_table",
    "chain_params",
    "cofactor_det",
    "compare_routes",
    "determinant_ratios",
    "exact_orthogonality",
    "gamma_direct",
    "gamma_from_chain",
    "hankel_det",
    "hankel_matrix",
    "leading_minors",
    "ratios_from_minors",
    "s_sequence",
    "verify_conjecture",
]
