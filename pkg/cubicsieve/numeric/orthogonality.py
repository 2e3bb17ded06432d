from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from mpmath import mp, mpf

from ..errors import InsufficientGammaError
from ..moments import moment_P
from ..polyalg import Poly, recurrence_polys
from ..qfield import QS2
from .models import OrthogonalityReport, OrthogonalityRow
from .quadrature import DEFAULT_MAX_DEGREE, DEFAULT_METHOD, quad_theta
from .weights import DEFAULT_DPS, wp_theta

logger = logging.getLogger(__name__)


def norm_products(gamma: Sequence[Fraction], n: int) -> QS2:
    """mu_0^P * gamma_1 * ... * gamma_n, the squared norm of P_n."""

    if len(gamma) <= n:
        raise InsufficientGammaError(f"norm of P_{n} needs gamma_{n}, got up to gamma_{len(gamma) - 1}")
    product = Fraction(1)
    for value in gamma[1 : n + 1]:
        product *= value
    return moment_P(0) * product


def _mp_coeffs(p: Poly) -> List:
    return [c.to_mpf() for c in p.coeffs]


def _horner(coeffs: List, x):
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _residual(pm: Poly, pn: Poly, tol, method: str, max_degree: int):
    cm, cn = _mp_coeffs(pm), _mp_coeffs(pn)

    def integrand(theta):
        x = mp.cos(theta)
        return _horner(cm, x) * _horner(cn, x) * wp_theta(theta)

    return quad_theta(integrand, tol, method=method, max_degree=max_degree)


def orthogonality_residual(
    m: int,
    n: int,
    gamma: Sequence[Fraction],
    tol: float = 1e-10,
    dps: int = DEFAULT_DPS,
    method: str = DEFAULT_METHOD,
    max_degree: int = DEFAULT_MAX_DEGREE,
):
    """Numeric integral of P_m P_n w_P over (-1, 1), with P built from ``gamma``."""

    polys = recurrence_polys(gamma, max(m, n))
    with mp.workdps(dps):
        result = _residual(polys[m], polys[n], tol, method, max_degree)
        return result.value


def orthogonality_sweep(
    gamma: Sequence[Fraction],
    depth: int,
    tol: float = 1e-10,
    dps: int = DEFAULT_DPS,
    method: str = DEFAULT_METHOD,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> OrthogonalityReport:
    """All pairs 0 <= m <= n <= depth: zero off the diagonal, mu_0 * gamma_1..gamma_n on it."""

    polys = recurrence_polys(gamma, depth)
    rows: List[OrthogonalityRow] = []
    with mp.workdps(dps):
        for n in range(depth + 1):
            for m in range(n + 1):
                expected = norm_products(gamma, n).to_mpf() if m == n else mpf(0)
                if (m + n) % 2:
                    value, estimate = mpf(0), mpf(0)
                else:
                    result = _residual(polys[m], polys[n], tol, method, max_degree)
                    value, estimate = result.value, result.error_estimate
                rows.append(
                    OrthogonalityRow(
                        m=m,
                        n=n,
                        value=mp.nstr(value, 17),
                        expected=mp.nstr(expected, 17),
                        error_estimate=mp.nstr(estimate, 17),
                        passed=abs(value - expected) < tol,
                    )
                )
    report = OrthogonalityReport(depth=depth, tolerance=tol, rows=rows, passed=all(r.passed for r in rows))
    logger.info("orthogonality sweep to P_%d: %d pairs, %d failures", depth, len(rows), len(report.failures()))
    return report
