from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from ..errors import InsufficientGammaError
from ..qfield import as_qs2
from ..qfield.qs2 import QS2Like
from .poly import Poly

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


def recurrence_polys(gamma: Sequence[QS2Like], count: int) -> List[Poly]:
    """Monic P_0..P_count from P_{n+1} = x P_n - gamma[n] P_{n-1}.

    ``gamma`` is index-aligned: gamma[n] is the coefficient of step n and
    gamma[0] is never read.
    """

    if count < 0:
        raise ValueError("count must be non-negative")
    if count >= 2 and len(gamma) < count:
        raise InsufficientGammaError(
            f"need gamma_1..gamma_{count - 1} for P_{count}, got {max(len(gamma) - 1, 0)} coefficients"
        )
    x = Poly.x()
    polys = [Poly.constant(1)]
    if count >= 1:
        polys.append(x)
    for n in range(1, count):
        polys.append(polys[n].shift() - polys[n - 1].scale(as_qs2(gamma[n])))
    return polys


def _chebyshev(first_step: Fraction, k: int) -> Poly:
    if k < 0:
        raise ValueError("Chebyshev index must be non-negative")
    gamma = [Fraction(0), first_step] + [QUARTER] * max(k - 2, 0)
    return recurrence_polys(gamma, k)[k]


def cheb_t_monic(k: int) -> Poly:
    """Monic Chebyshev polynomial of the first kind: 2^(1-k) T_k for k >= 1."""
    return _chebyshev(HALF, k)


def cheb_u_monic(k: int) -> Poly:
    """Monic Chebyshev polynomial of the second kind: 2^(-k) U_k."""
    return _chebyshev(QUARTER, k)


T3_HAT = cheb_t_monic(3)
U2_HAT = cheb_u_monic(2)
