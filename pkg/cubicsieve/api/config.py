from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_PATH = ROOT / "config/cubicsieve.yaml"

OutputFormat = Literal["json", "csv", "plain"]
VerifyTarget = Literal["conjecture", "mapping", "orthogonality", "weights"]
QuadMethod = Literal["gauss-legendre", "tanh-sinh"]


class CacheConfig(BaseModel):
    enabled: bool = True


class SieveConfig(BaseModel):
    """Settings shared by the CLI and the HTTP service."""

    version: str = "1.0"
    depth: int = Field(default=20, ge=1, description="triples N; gamma goes up to index 3N+2")
    tolerance: float = Field(default=1e-10, gt=0)
    precision: int = Field(default=50, ge=50, description="mpmath decimal digits for the oracle")
    quad_method: QuadMethod = "gauss-legendre"
    quad_max_degree: int = Field(default=10, ge=1)
    grid_points: int = Field(default=1000, ge=3)
    min_grid_points: int = Field(default=10001, ge=3)
    output_format: OutputFormat = "json"
    cache: CacheConfig = Field(default_factory=CacheConfig)


class RunConfig(BaseModel):
    """One CLI invocation after flags, environment and file have been merged."""

    command: Literal["moments", "gammas", "verify"]
    target: Optional[str] = None
    depth: int = 20
    weight: str = "Q"
    tolerance: float = 1e-10
    output_format: str = "json"
    out: Optional[Path] = None
    corrupt_moment: Optional[int] = Field(default=None, description="test hook: perturb this P moment")

    model_config = ConfigDict(frozen=True)
