from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from mpmath import mp, mpf

from ..numeric.weights import DEFAULT_DPS, eval_w, eval_w_P
from ..polyalg import T3_HAT, U2_HAT
from .models import TransferPoint, TransferReport

logger = logging.getLogger(__name__)

EXCLUDED = frozenset({Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1)})


def midpoint_grid(points: int) -> List[Fraction]:
    """Midpoints of ``points`` equal cells of (-1, 1), exactly."""

    return [Fraction(2 * i + 1 - points, points) for i in range(points)]


def weight_transfer_check(grid: int = 1000, tol: float = 1e-10, dps: int = DEFAULT_DPS) -> TransferReport:
    """|U2(x)| w_Q(T3(x)) against w_P(x) on a midpoint grid, skipping x = +-1/2.

    T3(x) and U2(x) are evaluated exactly before switching to mpmath, so the
    argument of w_Q never leaves (-1/4, 1/4) through rounding.
    """

    if grid < 3:
        raise ValueError("the transfer grid needs at least 3 points")
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    skipped: List[str] = []
    failures: List[TransferPoint] = []
    worst = mpf(0)
    with mp.workdps(dps):
        for x in midpoint_grid(grid):
            if x in EXCLUDED:
                skipped.append(str(x))
                continue
            lhs = abs(U2_HAT(x).to_mpf()) * eval_w((T3_HAT(x) * 4).to_mpf())
            rhs = eval_w_P(mpf(x.numerator) / x.denominator)
            error = abs(lhs - rhs)
            worst = max(worst, error)
            if error >= tol:
                failures.append(
                    TransferPoint(
                        x=str(x),
                        lhs=mp.nstr(lhs, 17),
                        rhs=mp.nstr(rhs, 17),
                        error=mp.nstr(error, 17),
                        passed=False,
                    )
                )
        max_error = mp.nstr(worst, 17)

    report = TransferReport(
        grid=grid,
        tolerance=tol,
        skipped=skipped,
        max_error=max_error,
        failures=failures,
        passed=not failures,
    )
    logger.info("weight transfer on %d points: max error %s, %d failures", grid, max_error, len(failures))
    return report
