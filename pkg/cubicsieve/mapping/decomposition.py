from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..errors import HypothesisViolation, InsufficientGammaError
from ..polyalg import T3_HAT, U2_HAT, Poly, poly_divrem, recurrence_polys
from .models import IdentityRow, MappingReport

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def q_coefficients(gamma: Sequence[Fraction], count: int) -> List[Fraction]:
    """[0, s_1..s_count] with s_n = gamma_{3n-2} gamma_{3n} / 4."""

    if count >= 1 and len(gamma) <= 3 * count:
        raise InsufficientGammaError(f"s_{count} needs gamma_{3 * count}, got up to gamma_{len(gamma) - 1}")
    return [Fraction(0)] + [gamma[3 * n - 2] * gamma[3 * n] / 4 for n in range(1, count + 1)]


def build_q_from_gamma(gamma: Sequence[Fraction], depth: int) -> List[Poly]:
    """Monic Q_0..Q_depth from Q_{n+1} = x Q_n - s_n Q_{n-1}."""

    if depth < 0:
        raise ValueError("depth must be non-negative")
    s = q_coefficients(gamma, max(depth - 1, 0))
    return recurrence_polys(s, depth)


def check_hypothesis(gamma: Sequence[Fraction]) -> None:
    """gamma_{3n} + gamma_{3n+1} = 1/2 and gamma_{3n+2} = 1/4 wherever the indices exist (gamma_0 = 0)."""

    if gamma and gamma[0] != 0:
        raise HypothesisViolation(f"gamma_0 must be 0, got {gamma[0]}")
    highest = len(gamma) - 1
    for i in range(2, highest + 1, 3):
        if gamma[i] != QUARTER:
            raise HypothesisViolation(f"gamma_{i} = {gamma[i]}, expected 1/4 (n={(i - 2) // 3})")
    for i in range(0, highest, 3):
        if gamma[i] + gamma[i + 1] != HALF:
            raise HypothesisViolation(
                f"gamma_{i} + gamma_{i + 1} = {gamma[i] + gamma[i + 1]}, expected 1/2 (n={i // 3})"
            )


def _row(n: int, identity: str, lhs: Poly, rhs: Poly) -> IdentityRow:
    bad: Optional[int] = lhs.first_difference(rhs)
    return IdentityRow(n=n, identity=identity, passed=bad is None, first_bad_coeff=bad)


def verify_decomposition(gamma: Sequence[Fraction], depth: int) -> MappingReport:
    """Exact check of the cubic decomposition for n = 0..depth-1.

    (i)   P_{3n}          = Q_n(T3)
    (ii)  U2 P_{3n+1}     = Q_{n+1}(T3) + gamma_{3n+1} x Q_n(T3)
    (iii) U2 P_{3n+2}     = x Q_{n+1}(T3) + gamma_{3n+1}/4 Q_n(T3)
    plus zero remainders of both right-hand sides under division by U2.
    Needs gamma_1..gamma_{3 depth - 2}.
    """

    if depth < 1:
        raise ValueError("depth must be at least 1")
    check_hypothesis(gamma)
    if len(gamma) < 3 * depth - 1:
        raise InsufficientGammaError(
            f"depth {depth} needs gamma up to index {3 * depth - 2}, got up to {len(gamma) - 1}"
        )

    p = recurrence_polys(gamma, 3 * depth - 1)
    # s_{depth-1} needs gamma_{3 depth - 3}, already required above
    q = recurrence_polys(q_coefficients(gamma, depth - 1), depth)
    composed = [qn.compose(T3_HAT) for qn in q]
    x = Poly.x()

    rows: List[IdentityRow] = []
    for n in range(depth):
        g = gamma[3 * n + 1]
        rhs_ii = composed[n + 1] + (x * composed[n]).scale(g)
        rhs_iii = x * composed[n + 1] + composed[n].scale(g * QUARTER)
        rows.append(_row(n, "P3n", p[3 * n], composed[n]))
        rows.append(_row(n, "P3n1", U2_HAT * p[3 * n + 1], rhs_ii))
        rows.append(_row(n, "P3n2", U2_HAT * p[3 * n + 2], rhs_iii))
        _, rem_ii = poly_divrem(rhs_ii, U2_HAT)
        _, rem_iii = poly_divrem(rhs_iii, U2_HAT)
        divisible = rem_ii.is_zero() and rem_iii.is_zero()
        first = None
        if not divisible:
            first = rem_ii.first_difference(Poly()) if not rem_ii.is_zero() else rem_iii.first_difference(Poly())
        rows.append(IdentityRow(n=n, identity="divisibility", passed=divisible, first_bad_coeff=first))

    report = MappingReport(depth=depth, rows=rows, passed=all(row.passed for row in rows))
    if report.passed:
        logger.info("decomposition verified for n = 0..%d (P up to degree %d)", depth - 1, 3 * depth - 1)
    else:
        logger.warning("decomposition failed at %s", [(r.n, r.identity) for r in report.failures()])
    return report
