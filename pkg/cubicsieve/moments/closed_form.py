from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..polyalg import T3_HAT, Poly
from ..qfield import QS2, SQRT2, ZERO

# t = sqrt(1 + x) carries the kink x = -1/2 to t = 1/sqrt(2) and the end x = 1 to t = sqrt(2).
_KINK_T = SQRT2 / 2
_END_T = SQRT2
_SHIFTED_KINK = Poly((Fraction(-1, 2), 0, 1))


@lru_cache(maxsize=None)
def _branch_integral(k: int) -> QS2:
    """Exact value of  integral_{-1}^{1} x^k |x + 1/2| / sqrt(1 + x) dx.

    With t = sqrt(1 + x) it becomes 2 * integral_0^sqrt2 (t^2 - 1)^k |t^2 - 1/2| dt;
    the absolute value flips sign at t = 1/sqrt(2).
    """

    even = [ZERO] * (2 * k + 1)
    for i in range(k + 1):
        even[2 * i] = QS2(comb(k, i) * (-1) ** (k - i))
    primitive = (Poly(even) * _SHIFTED_KINK).antiderivative()
    return 2 * (primitive(_END_T) - 2 * primitive(_KINK_T))


def moment_P(k: int) -> QS2:
    """mu_k of w_P(x) = |x+1/2|/sqrt(1+x) + |x-1/2|/sqrt(1-x) on (-1, 1).

    The second term is the mirror image of the first, so it contributes
    (-1)^k times the same integral.
    """

    if k < 0:
        raise ValueError("moment index must be non-negative")
    if k % 2:
        return ZERO
    return 2 * _branch_integral(k)


@lru_cache(maxsize=None)
def moment_Q(n: int) -> QS2:
    """mu_n of w_Q(x) = w(4x) on (-1/4, 1/4), pushed forward through T3_hat.

    T3_hat maps (-1, 1) onto (-1/4, 1/4) three-to-one with |T3_hat'| = 3|U2_hat|,
    and w_P = |U2_hat| * w_Q(T3_hat), so the integral of T3_hat(x)^n w_P(x)
    over (-1, 1) is exactly mu_n.
    """

    if n < 0:
        raise ValueError("moment index must be non-negative")
    if n % 2:
        return ZERO
    return pushforward(T3_HAT ** n)


def pushforward(p: Poly) -> QS2:
    """integral of p(x) w_P(x) dx over (-1, 1), termwise."""

    total = ZERO
    for k, c in enumerate(p.coeffs):
        if k % 2 or c.is_zero():
            continue
        total = total + c * moment_P(k)
    return total
