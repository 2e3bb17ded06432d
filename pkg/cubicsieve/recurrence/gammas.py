from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from ..errors import PositivityError, TableTooShortError
from ..moments import MomentTable, WeightId
from ..qfield import format_rat
from .chain import chain_params, determinant_ratios, gamma_from_chain, ratios_from_minors
from .hankel import leading_minors
from .models import GammaRow, RecurrenceTable, RouteComparison

logger = logging.getLogger(__name__)


def gamma_direct(table_p: MomentTable, depth: int) -> List[Fraction]:
    """gamma_0 = 0 and gamma_n = Delta_n Delta_{n-2} / Delta_{n-1}^2 on the P moments, 1 <= n <= depth.

    For a symmetric positive-definite functional these ratios are the
    recurrence coefficients of its monic orthogonal polynomials.
    """

    if table_p.weight_id is not WeightId.P:
        logger.warning("gamma_direct applied to the %s table", table_p.weight_id.value)
    if 2 * depth > table_p.max_index:
        raise TableTooShortError(f"gamma_{depth} needs mu_{2 * depth}, the table stops at mu_{table_p.max_index}")
    gamma = determinant_ratios(table_p, depth)
    for n in range(1, depth + 1):
        if gamma[n] <= 0:
            raise PositivityError(f"gamma_{n} = {gamma[n]} is not positive")
    return gamma


def build_recurrence_table(table_q: MomentTable, depth: int) -> RecurrenceTable:
    """Delta, s, g and gamma for N = depth triples from the Q moments."""

    deltas = leading_minors(table_q, depth)
    for n, delta in enumerate(deltas):
        if delta.sign() != 1:
            raise PositivityError(f"Delta_{n} = {delta} is not positive")
    s = ratios_from_minors(deltas)
    g = chain_params(s)
    gamma = gamma_from_chain(g)
    logger.info("recurrence ledger built to n=%d (gamma up to index %d)", depth, len(gamma) - 1)
    return RecurrenceTable(depth=depth, delta=tuple(deltas), s=tuple(s), g=tuple(g), gamma=tuple(gamma))


def compare_routes(chain: Sequence[Fraction], direct: Sequence[Fraction]) -> RouteComparison:
    """Entry-for-entry comparison of two index-aligned gamma lists (index 0 skipped)."""

    highest = min(len(chain), len(direct)) - 1
    rows = [
        GammaRow(
            index=i,
            chain=format_rat(chain[i]),
            direct=format_rat(direct[i]),
            match=chain[i] == direct[i],
        )
        for i in range(1, highest + 1)
    ]
    comparison = RouteComparison(depth=highest, rows=rows, all_match=all(row.match for row in rows))
    if not comparison.all_match:
        logger.warning("gamma routes disagree at indices %s", [row.index for row in comparison.mismatches()])
    return comparison
