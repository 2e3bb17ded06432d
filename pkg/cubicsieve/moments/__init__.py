"""
Exact moments of the two weights and the moment functional.
"""

from .cache import CacheStatistics, TableCache
from .closed_form import moment_P, moment_Q
from .functional import apply_functional, inner_product, moment_table
from .models import MomentTable, WeightId, WeightSpec

__all__ = [
    "CacheStatistics",
    "MomentTable",
    "TableCache",
    "WeightId",
    "WeightSpec",
    "apply_functional",
    "inner_product",
    "moment_P",
    "moment_Q",
    "moment_table",
]
