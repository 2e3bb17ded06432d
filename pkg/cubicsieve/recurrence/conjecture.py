from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Sequence

from ..errors import InsufficientGammaError
from ..qfield import format_rat
from .models import CheckResult, ConjectureReport

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

PINNED: Dict[int, Fraction] = {
    3: Fraction(7, 30),
    4: Fraction(4, 15),
    6: Fraction(12, 49),
    7: Fraction(25, 98),
    9: Fraction(3187, 12870),
    10: Fraction(1624, 6435),
}


def verify_conjecture(gamma: Sequence[Fraction]) -> ConjectureReport:
    """Check gamma_1 = 1/2, gamma_{3n+2} = 1/4, gamma_{3n+3} + gamma_{3n+4} = 1/2,
    positivity and the pinned values, wherever the indices exist.

    ``gamma`` is index-aligned (gamma[0] = gamma_0 is not checked).
    """

    highest = len(gamma) - 1
    if highest < 4:
        raise InsufficientGammaError(f"need gamma_1..gamma_4 at least, got up to gamma_{highest}")

    checks: List[CheckResult] = [
        CheckResult(name="gamma1_half", n=1, passed=gamma[1] == HALF, detail=format_rat(gamma[1])),
    ]
    n = 0
    while 3 * n + 2 <= highest:
        value = gamma[3 * n + 2]
        checks.append(CheckResult(name="quarter", n=n, passed=value == QUARTER, detail=format_rat(value)))
        if 3 * n + 4 <= highest:
            total = gamma[3 * n + 3] + gamma[3 * n + 4]
            checks.append(CheckResult(name="pair_sum", n=n, passed=total == HALF, detail=format_rat(total)))
        n += 1
    for i in range(1, highest + 1):
        checks.append(CheckResult(name="positive", n=i, passed=gamma[i] > 0, detail=format_rat(gamma[i])))
    for i, expected in PINNED.items():
        if i <= highest:
            checks.append(CheckResult(name="pinned", n=i, passed=gamma[i] == expected, detail=format_rat(gamma[i])))

    report = ConjectureReport(highest_index=highest, checks=checks, passed=all(c.passed for c in checks))
    if not report.passed:
        logger.warning("conjecture checks failed: %s", [(c.name, c.n) for c in report.failures()])
    return report
