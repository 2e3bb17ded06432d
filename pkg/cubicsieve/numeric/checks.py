from __future__ import annotations

import logging
from typing import Callable, List

from mpmath import mp, mpf

from ..moments import WeightId, moment_P, moment_Q
from .models import SweepResult
from .quadrature import DEFAULT_MAX_DEGREE, DEFAULT_METHOD, oracle_moment
from .weights import DEFAULT_DPS, eval_w, eval_w_cos_form, eval_w_secant_form, triple_angle_rhs

logger = logging.getLogger(__name__)

THETA_MARGIN = mpf("0.01")


def theta_grid(points: int) -> List:
    """``points`` equally spaced angles from 0.01 to pi - 0.01."""

    low, high = THETA_MARGIN, mp.pi - THETA_MARGIN
    step = (high - low) / (points - 1)
    return [low + i * step for i in range(points)]


def symmetric_grid(points: int) -> List:
    """Midpoints of ``points`` equal cells of (-1, 1); odd counts include 0."""

    return [mpf(2 * i + 1 - points) / points for i in range(points)]


def _sweep(name: str, values: List, tol: float, detail: str | None = None) -> SweepResult:
    worst = max(values) if values else mpf(0)
    result = SweepResult(
        name=name,
        points=len(values),
        max_error=mp.nstr(worst, 17),
        tolerance=tol,
        passed=worst < tol,
        detail=detail,
    )
    if not result.passed:
        logger.warning("sweep %s failed: max error %s above %g", name, result.max_error, tol)
    return result


def _against(form: Callable, name: str, points: int, tol: float) -> SweepResult:
    errors = [abs(eval_w(mp.cos(t)) - form(t)) for t in theta_grid(points)]
    return _sweep(name, errors, tol)


def dual_form_sweep(points: int = 1000, tol: float = 1e-12, dps: int = DEFAULT_DPS) -> SweepResult:
    with mp.workdps(dps):
        return _against(eval_w_secant_form, "dual_form", points, tol)


def cos_form_sweep(points: int = 1000, tol: float = 1e-12, dps: int = DEFAULT_DPS) -> SweepResult:
    with mp.workdps(dps):
        return _against(eval_w_cos_form, "cos_form", points, tol)


def triple_angle_sweep(points: int = 1000, tol: float = 1e-10, dps: int = DEFAULT_DPS) -> SweepResult:
    """w(cos 3t) against the absolute-value form in cos t, skipping t near pi/3 and 2pi/3."""

    with mp.workdps(dps):
        kinks = (mp.pi / 3, 2 * mp.pi / 3)
        errors = []
        for t in theta_grid(points):
            if any(abs(t - k) < mpf("1e-6") for k in kinks):
                continue
            errors.append(abs(eval_w(mp.cos(3 * t)) - triple_angle_rhs(t)))
        return _sweep("triple_angle", errors, tol)


def evenness_sweep(points: int = 1000, tol: float = 1e-13, dps: int = DEFAULT_DPS) -> SweepResult:
    with mp.workdps(dps):
        errors = [abs(eval_w(x) - eval_w(-x)) for x in symmetric_grid(points)]
        return _sweep("evenness", errors, tol)


def grid_minimum(points: int = 10001, tol: float = 1e-9, dps: int = DEFAULT_DPS) -> SweepResult:
    """min of w over the grid must not drop below 4 - tol; the argmin goes into ``detail``."""

    with mp.workdps(dps):
        values = [(eval_w(x), x) for x in symmetric_grid(points)]
        lowest, where = min(values, key=lambda item: item[0])
        shortfall = max(mpf(4) - lowest, mpf(0))
        return _sweep(
            "grid_minimum",
            [shortfall],
            tol,
            detail=f"min {mp.nstr(lowest, 17)} at x = {mp.nstr(where, 17)}",
        )


def moment_agreement(
    weight: WeightId | str,
    highest: int = 12,
    tol: float = 1e-10,
    dps: int = DEFAULT_DPS,
    method: str = DEFAULT_METHOD,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> SweepResult:
    """|quadrature moment - exact moment| for k = 0..highest."""

    wid = WeightId(weight)
    exact = moment_P if wid is WeightId.P else moment_Q
    errors = []
    with mp.workdps(dps):
        for k in range(highest + 1):
            numeric = oracle_moment(wid, k, tol, method=method, max_degree=max_degree).value
            errors.append(abs(numeric - exact(k).to_mpf()))
        return _sweep(f"moments_{wid.value}", errors, tol, detail=f"k = 0..{highest}")
