from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..qfield import ONE, QS2, format_rat


class CheckResult(BaseModel):
    """One exact check; serialized with the key "pass"."""

    name: str
    n: int
    passed: bool = Field(alias="pass")
    detail: Optional[str] = None

    model_config = ConfigDict(populate_by_name=True)


class ConjectureReport(BaseModel):
    highest_index: int
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class RecurrenceTable(BaseModel):
    """The numeric ledger of the chain-sequence construction.

    ``delta`` holds Delta_0..Delta_N (Delta_-1 = 1 is implicit, see delta_at);
    ``s``, ``g`` and ``gamma`` are index-aligned with s_0 = g_0 = gamma_0 = 0.
    """

    depth: int
    delta: Tuple[QS2, ...]
    s: Tuple[Fraction, ...]
    g: Tuple[Fraction, ...]
    gamma: Tuple[Fraction, ...]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def delta_at(self, n: int) -> QS2:
        return ONE if n == -1 else self.delta[n]

    def ledger_rows(self) -> List[Dict[str, Any]]:
        rows = []
        for n in range(self.depth + 1):
            rows.append(
                {
                    "n": n,
                    "delta": self.delta[n].to_dict(),
                    "s": format_rat(self.s[n]),
                    "g": format_rat(self.g[n]),
                    "gamma": [format_rat(v) for v in self.gamma[3 * n : 3 * n + 3]],
                }
            )
        return rows


class GammaRow(BaseModel):
    index: int
    chain: str
    direct: str
    match: bool


class RouteComparison(BaseModel):
    depth: int
    rows: List[GammaRow] = Field(default_factory=list)
    all_match: bool

    def mismatches(self) -> List[GammaRow]:
        return [row for row in self.rows if not row.match]


class ExactOrthogonality(BaseModel):
    """L[P_m P_n] = 0 for m < n and L[P_n^2] = mu_0 gamma_1..gamma_n, exactly."""

    depth: int
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class RoutesReport(BaseModel):
    """Ledger of the chain route next to the gamma comparison of both routes."""

    depth: int
    ledger: List[Dict[str, Any]] = Field(default_factory=list)
    comparison: RouteComparison
    passed: bool


class ConjectureSummary(BaseModel):
    depth: int
    chain: ConjectureReport
    direct: ConjectureReport
    routes: RouteComparison
    passed: bool
