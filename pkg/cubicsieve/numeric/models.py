from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class SweepResult(BaseModel):
    """One oracle sweep; numbers are 17-significant-digit strings."""

    name: str
    points: int
    max_error: str
    tolerance: float
    passed: bool = Field(alias="pass")
    detail: Optional[str] = None

    model_config = ConfigDict(populate_by_name=True)


class WeightsReport(BaseModel):
    precision: int
    sweeps: List[SweepResult] = Field(default_factory=list)
    passed: bool

    def failures(self) -> List[SweepResult]:
        return [s for s in self.sweeps if not s.passed]


class OrthogonalityRow(BaseModel):
    m: int
    n: int
    value: str
    expected: str
    error_estimate: str
    passed: bool = Field(alias="pass")

    model_config = ConfigDict(populate_by_name=True)


class OrthogonalityReport(BaseModel):
    depth: int
    tolerance: float
    rows: List[OrthogonalityRow] = Field(default_factory=list)
    passed: bool

    def failures(self) -> List[OrthogonalityRow]:
        return [row for row in self.rows if not row.passed]
