from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..qfield import QS2


class WeightId(str, Enum):
    """The two concrete weights the pipeline knows."""

    P = "P"
    Q = "Q"


SUPPORTS: Dict[WeightId, Tuple[Fraction, Fraction]] = {
    WeightId.P: (Fraction(-1), Fraction(1)),
    WeightId.Q: (Fraction(-1, 4), Fraction(1, 4)),
}


class WeightSpec(BaseModel):
    """A weight together with the endpoints (xi, eta) of its support."""

    weight_id: WeightId
    support: Tuple[Fraction, Fraction]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @classmethod
    def of(cls, weight_id: WeightId | str) -> "WeightSpec":
        wid = WeightId(weight_id)
        return cls(weight_id=wid, support=SUPPORTS[wid])

    @model_validator(mode="after")
    def _check_support(self) -> "WeightSpec":
        xi, eta = self.support
        if not xi < eta:
            raise ValueError(f"support endpoints must satisfy xi < eta, got ({xi}, {eta})")
        if self.weight_id is WeightId.Q and not (Fraction(-1, 4) <= xi and eta <= Fraction(1, 4)):
            raise ValueError("the Q weight lives inside [-1/4, 1/4]")
        return self


class MomentTable(BaseModel):
    """Exact moments mu_0..mu_{2N} of one weight; entry k is mu_k."""

    weight_id: WeightId
    moments: Tuple[QS2, ...]

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def count(self) -> int:
        """The N of mu_0..mu_{2N}."""
        return (len(self.moments) - 1) // 2

    @property
    def max_index(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, k: int) -> QS2:
        return self.moments[k]

    def truncated(self, count: int) -> "MomentTable":
        if count > self.count:
            raise ValueError(f"cannot truncate a depth-{self.count} table to depth {count}")
        return MomentTable(weight_id=self.weight_id, moments=self.moments[: 2 * count + 1])

    def with_moment(self, k: int, value: QS2) -> "MomentTable":
        moments = list(self.moments)
        moments[k] = value
        return MomentTable(weight_id=self.weight_id, moments=tuple(moments))

    def to_json(self) -> Dict[str, Any]:
        return {"weight": self.weight_id.value, "moments": [m.to_dict() for m in self.moments]}

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> "MomentTable":
        moments: List[QS2] = [QS2.from_dict(item) for item in payload["moments"]]
        return cls(weight_id=WeightId(payload["weight"]), moments=tuple(moments))
