from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from ..moments import MomentTable, inner_product
from ..polyalg import recurrence_polys
from .models import CheckResult, ExactOrthogonality

logger = logging.getLogger(__name__)


def exact_orthogonality(table: MomentTable, gamma: Sequence[Fraction], depth: int) -> ExactOrthogonality:
    """Inner products of P_0..P_depth under ``table``; every pair with m <= n."""

    polys = recurrence_polys(gamma, depth)
    checks: List[CheckResult] = []
    norm = table[0]
    for n in range(depth + 1):
        if n:
            norm = norm * gamma[n]
        for m in range(n + 1):
            value = inner_product(polys[m], polys[n], table)
            expected = norm if m == n else 0
            checks.append(
                CheckResult(
                    name="norm" if m == n else "orthogonal",
                    n=n,
                    passed=value == expected,
                    detail=f"m={m} value={value}",
                )
            )
    report = ExactOrthogonality(depth=depth, checks=checks, passed=all(c.passed for c in checks))
    if not report.passed:
        logger.warning("exact orthogonality failed for %d pairs", len(report.failures()))
    return report
