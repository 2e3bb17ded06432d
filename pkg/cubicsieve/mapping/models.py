from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Identity = Literal["P3n", "P3n1", "P3n2", "divisibility"]


class IdentityRow(BaseModel):
    """One exact polynomial identity at one n; serialized with the key "pass"."""

    n: int
    identity: Identity
    passed: bool = Field(alias="pass")
    first_bad_coeff: Optional[int] = None

    model_config = ConfigDict(populate_by_name=True)


class MappingReport(BaseModel):
    depth: int
    rows: List[IdentityRow] = Field(default_factory=list)
    passed: bool

    def failures(self) -> List[IdentityRow]:
        return [row for row in self.rows if not row.passed]

    def identity_rows(self) -> List[IdentityRow]:
        return [row for row in self.rows if row.identity != "divisibility"]


class TransferPoint(BaseModel):
    x: str
    lhs: str
    rhs: str
    error: str
    passed: bool = Field(alias="pass")

    model_config = ConfigDict(populate_by_name=True)


class TransferReport(BaseModel):
    grid: int
    tolerance: float
    skipped: List[str] = Field(default_factory=list)
    max_error: str
    failures: List[TransferPoint] = Field(default_factory=list)
    passed: bool
