from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Tuple

from mpmath import mp, mpf

from ..errors import QuadratureError
from ..moments import WeightId
from .weights import wp_theta, wq_theta

logger = logging.getLogger(__name__)

DEFAULT_METHOD = "gauss-legendre"
DEFAULT_MAX_DEGREE = 10


@dataclass(frozen=True)
class QuadResult:
    value: mpf
    error_estimate: mpf
    evaluations: int


def _kink_angles() -> list:
    return [mpf(0), mp.pi / 3, 2 * mp.pi / 3, mp.pi]


def quad_theta(
    integrand: Callable,
    tol,
    extra_angles: Iterable = (),
    method: str = DEFAULT_METHOD,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> QuadResult:
    """Integrate over theta in (0, pi), always splitting at pi/3 and 2pi/3.

    Runs at the caller's mpmath precision. ``max_degree`` bounds the number of
    evaluations; the tanh-sinh rule samples the ends much more closely than
    Gauss-Legendre, so it is only safe for integrands written in theta.
    """

    calls = 0

    def counted(theta):
        nonlocal calls
        calls += 1
        return integrand(theta)

    points = sorted(set(_kink_angles()) | {mpf(a) for a in extra_angles if 0 < a < mp.pi})
    value, error = mp.quad(counted, points, method=method, error=True, maxdegree=max_degree)
    error = abs(error)
    logger.debug("quadrature: %d evaluations, error estimate %s", calls, mp.nstr(error, 5))
    if error > tol:
        raise QuadratureError(
            f"quadrature error estimate {mp.nstr(error, 5)} exceeds tolerance {mp.nstr(mpf(tol), 5)} after {calls} evaluations"
        )
    return QuadResult(value=value, error_estimate=error, evaluations=calls)


def quad(
    fn: Callable,
    interval: Tuple,
    tol,
    kinks: Iterable = (),
    method: str = DEFAULT_METHOD,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> QuadResult:
    """integral_a^b fn(x) dx after x = c + h cos(theta).

    The substitution turns 1/sqrt(1 -+ x) end singularities into bounded
    integrands; ``kinks`` (in x) become extra split angles.
    """

    a, b = mpf(interval[0]), mpf(interval[1])
    if not a < b:
        raise ValueError("quadrature interval must satisfy a < b")
    center, half = (a + b) / 2, (b - a) / 2
    angles = [mp.acos((mpf(k) - center) / half) for k in kinks if a < mpf(k) < b]
    return quad_theta(
        lambda theta: fn(center + half * mp.cos(theta)) * half * mp.sin(theta),
        tol,
        extra_angles=angles,
        method=method,
        max_degree=max_degree,
    )


def oracle_moment(weight: WeightId | str, k: int, tol, method: str = DEFAULT_METHOD, max_degree: int = DEFAULT_MAX_DEGREE) -> QuadResult:
    """mu_k by quadrature, independent of the exact layer.

    P: integral of cos(t)^k w_P(cos t) sin t;  Q: integral of (cos(t)/4)^k w(cos t) sin(t)/4,
    the 1/4 coming from dx = sin(t) dt / 4 under 4x = cos t.
    """

    wid = WeightId(weight)
    if wid is WeightId.P:
        return quad_theta(lambda t: mp.cos(t) ** k * wp_theta(t), tol, method=method, max_degree=max_degree)
    return quad_theta(lambda t: (mp.cos(t) / 4) ** k * wq_theta(t) / 4, tol, method=method, max_degree=max_degree)
