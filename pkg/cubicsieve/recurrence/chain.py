from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from ..errors import ChainSequenceViolation, NonRationalRatioError, ZeroDeterminantError
from ..moments import MomentTable
from ..qfield import ONE, QS2
from .hankel import leading_minors

logger = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


def ratios_from_minors(deltas: Sequence[QS2]) -> List[Fraction]:
    """[0, r_1..r_N] with r_n = Delta_n Delta_{n-2} / Delta_{n-1}^2, from Delta_0..Delta_N."""

    ratios = [Fraction(0)]
    for n in range(1, len(deltas)):
        before = deltas[n - 2] if n >= 2 else ONE
        pivot = deltas[n - 1]
        if pivot.is_zero():
            raise ZeroDeterminantError(f"Delta_{n - 1} vanishes")
        ratio: QS2 = deltas[n] * before / (pivot * pivot)
        if not ratio.is_rational():
            raise NonRationalRatioError(f"ratio at n={n} kept a sqrt2 part: {ratio}")
        ratios.append(ratio.rat_part)
    return ratios


def determinant_ratios(table: MomentTable, depth: int) -> List[Fraction]:
    """[0, r_1..r_depth] with r_n = Delta_n Delta_{n-2} / Delta_{n-1}^2."""

    if depth < 0:
        return [Fraction(0)]
    return ratios_from_minors(leading_minors(table, depth))


def s_sequence(table: MomentTable, depth: int) -> List[Fraction]:
    """s_0 = 0 and s_n = Delta_n Delta_{n-2} / Delta_{n-1}^2 for the Q functional."""
    return determinant_ratios(table, depth)


def chain_params(s: Sequence[Fraction]) -> List[Fraction]:
    """Minimal parameters of the chain sequence (16 s_n): g_0 = 0, g_n = 16 s_n / (1 - g_{n-1})."""

    g = [Fraction(0)]
    for n in range(1, len(s)):
        value = 16 * s[n] / (1 - g[n - 1])
        if not 0 < value < 1:
            raise ChainSequenceViolation(f"g_{n} = {value} left (0, 1) at s_{n} = {s[n]}")
        g.append(value)
    return g


def gamma_from_chain(g: Sequence[Fraction]) -> List[Fraction]:
    """gamma_{3n} = g_n/2, gamma_{3n+1} = (1 - g_n)/2, gamma_{3n+2} = 1/4."""

    if not g or g[0] != 0:
        raise ChainSequenceViolation("the construction starts from the minimal parameter g_0 = 0")
    gamma: List[Fraction] = []
    for n, value in enumerate(g):
        if n and not 0 < value < 1:
            raise ChainSequenceViolation(f"g_{n} = {value} is not in (0, 1)")
        gamma.extend((value / 2, (1 - value) / 2, QUARTER))
    return gamma
