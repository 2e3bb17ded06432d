from __future__ import annotations

from cubicsieve.moments import TableCache, WeightId, moment_table


def test_cache_serves_shallower_requests_from_a_deeper_table() -> None:
    cache = TableCache()
    assert cache.get(WeightId.Q, 3) is None
    cache.put(moment_table("Q", 5))

    shallow = cache.get(WeightId.Q, 3)
    assert shallow is not None
    assert shallow.count == 3
    assert cache.get(WeightId.Q, 6) is None
    assert cache.get(WeightId.P, 1) is None

    stats = cache.get_statistics()
    assert stats.hits == 1
    assert stats.misses == 3
    assert stats.size == 1
    assert stats.hit_rate() == 0.25


def test_cache_keeps_the_deepest_table() -> None:
    cache = TableCache()
    cache.put(moment_table("P", 4))
    cache.put(moment_table("P", 2))
    table = cache.get(WeightId.P, 4)
    assert table is not None and table.count == 4
    cache.put(moment_table("P", 6))
    table = cache.get(WeightId.P, 6)
    assert table is not None and table.count == 6


def test_invalidate_all_empties_the_cache() -> None:
    cache = TableCache()
    cache.put(moment_table("Q", 2))
    cache.invalidate_all()
    assert cache.get(WeightId.Q, 1) is None
    assert cache.get_statistics().size == 0
