from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field

from ..moments import WeightId
from .config import RunConfig, SieveConfig

FORMATS = ("json", "csv", "plain")
TARGETS = ("conjecture", "mapping", "orthogonality", "weights")


class ValidationIssue(BaseModel):
    field: str
    message: str
    severity: str  # "error", "warning"


class ValidationResult(BaseModel):
    is_valid: bool
    errors: List[ValidationIssue] = Field(default_factory=list)

    def summary(self) -> str:
        return "; ".join(f"{issue.field}: {issue.message}" for issue in self.errors)


class RunConfigValidator:
    """Checks a merged run configuration before any computation starts."""

    def validate(self, run: RunConfig, settings: Optional[SieveConfig] = None) -> ValidationResult:
        issues: List[ValidationIssue] = []
        issues.extend(self._validate_depth(run))
        if run.tolerance <= 0:
            issues.append(ValidationIssue(field="tolerance", message="Tolerance must be positive", severity="error"))
        if run.output_format not in FORMATS:
            issues.append(
                ValidationIssue(
                    field="format",
                    message=f"Format must be one of {', '.join(FORMATS)}",
                    severity="error",
                )
            )
        if run.weight not in {w.value for w in WeightId}:
            issues.append(ValidationIssue(field="weight", message="Weight must be P or Q", severity="error"))
        target_issue = self._validate_target(run)
        if target_issue:
            issues.append(target_issue)
        if settings is not None:
            issues.extend(self._validate_settings(settings))

        errors = [issue for issue in issues if issue.severity == "error"]
        return ValidationResult(is_valid=not errors, errors=issues)

    def _validate_depth(self, run: RunConfig) -> List[ValidationIssue]:
        floor = 0 if run.command == "moments" else 1
        if run.depth < floor:
            return [ValidationIssue(field="depth", message=f"Depth must be at least {floor}", severity="error")]
        if run.command != "moments" and run.depth > 40:
            return [
                ValidationIssue(
                    field="depth",
                    message="Depths above 40 triples are slow in exact arithmetic",
                    severity="warning",
                )
            ]
        return []

    def _validate_target(self, run: RunConfig) -> Optional[ValidationIssue]:
        if run.command != "verify":
            return None
        if run.target not in TARGETS:
            return ValidationIssue(
                field="target",
                message=f"Verify target must be one of {', '.join(TARGETS)}",
                severity="error",
            )
        return None

    def _validate_settings(self, settings: SieveConfig) -> List[ValidationIssue]:
        issues: List[ValidationIssue] = []
        if settings.grid_points < 3:
            issues.append(ValidationIssue(field="grid_points", message="Grid needs at least 3 points", severity="error"))
        if settings.min_grid_points % 2 == 0:
            issues.append(
                ValidationIssue(
                    field="min_grid_points",
                    message="An even grid misses x = 0, where w attains its minimum",
                    severity="warning",
                )
            )
        if settings.precision < 50:
            issues.append(ValidationIssue(field="precision", message="Oracle precision must be at least 50 digits", severity="error"))
        return issues
