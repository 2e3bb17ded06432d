from __future__ import annotations

import logging
from dataclasses import dataclass
from threading import Lock
from typing import Dict, Optional

from .models import MomentTable, WeightId

logger = logging.getLogger(__name__)


@dataclass
class CacheStatistics:
    hits: int = 0
    misses: int = 0
    size: int = 0

    def hit_rate(self) -> float:
        total = self.hits + self.misses
        return self.hits / total if total > 0 else 0.0


class TableCache:
    """In-memory cache of moment tables, one deepest table per weight.

    Tables are immutable, so entries never expire; a shallower request is
    served by truncating the cached table.
    """

    def __init__(self) -> None:
        self.tables: Dict[WeightId, MomentTable] = {}
        self.stats = CacheStatistics()
        self.lock = Lock()

    def get(self, weight_id: WeightId, count: int) -> Optional[MomentTable]:
        with self.lock:
            entry = self.tables.get(weight_id)
            if entry is None or entry.count < count:
                self.stats.misses += 1
                return None
            self.stats.hits += 1
        return entry if entry.count == count else entry.truncated(count)

    def put(self, table: MomentTable) -> None:
        with self.lock:
            current = self.tables.get(table.weight_id)
            if current is not None and current.count >= table.count:
                return
            if current is not None:
                logger.debug("replacing %s table of depth %d by depth %d", table.weight_id.value, current.count, table.count)
            self.tables[table.weight_id] = table
            self.stats.size = len(self.tables)

    def invalidate_all(self) -> None:
        with self.lock:
            self.tables.clear()
            self.stats.size = 0

    def get_statistics(self) -> CacheStatistics:
        return self.stats
