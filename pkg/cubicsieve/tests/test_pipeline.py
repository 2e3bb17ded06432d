from __future__ import annotations

import threading

import pytest

from cubicsieve.api.config import CacheConfig, SieveConfig
from cubicsieve.pipeline import CORRUPTION, Pipeline
from cubicsieve.qfield import SQRT2


def test_moment_tables_are_cached() -> None:
    pipeline = Pipeline()
    deep = pipeline.moment_table("P", 6)
    shallow = pipeline.moment_table("P", 3)
    assert shallow.moments == deep.moments[:7]
    stats = pipeline.get_cache_statistics()
    assert stats.hits == 1
    assert stats.misses == 1
    assert pipeline.get_metrics()["tables_built"] == 1


def test_cache_can_be_switched_off() -> None:
    pipeline = Pipeline(SieveConfig(cache=CacheConfig(enabled=False)))
    pipeline.moment_table("Q", 2)
    pipeline.moment_table("Q", 2)
    assert pipeline.get_metrics()["tables_built"] == 2
    assert pipeline.get_cache_statistics().size == 0


def test_routes_agree_for_small_depth() -> None:
    report = Pipeline().gammas_both_routes(3)
    assert report.passed
    assert report.comparison.depth == 11
    assert len(report.ledger) == 4


def test_corrupted_moment_breaks_the_routes() -> None:
    pipeline = Pipeline()
    report = pipeline.gammas_both_routes(2, corrupt_moment=16)
    assert [row.index for row in report.comparison.mismatches()] == [8]
    assert not report.passed
    assert pipeline.get_metrics()["check_failures"] > 0
    assert pipeline.moment_table("P", 4)[4] == SQRT2 * 3 / 4
    assert CORRUPTION == SQRT2 / 1000


def test_corrupt_moment_out_of_range() -> None:
    with pytest.raises(ValueError):
        Pipeline().gammas_both_routes(1, corrupt_moment=99)


def test_conjecture_and_mapping_reports() -> None:
    pipeline = Pipeline()
    assert pipeline.conjecture_report(5).passed
    mapping = pipeline.mapping_report(4)
    assert mapping.passed
    assert len(mapping.identity_rows()) == 12


def test_orthogonality_summary() -> None:
    summary = Pipeline().orthogonality_report(4, 1e-9)
    assert summary.passed
    assert summary.exact.passed
    assert summary.numeric.depth == 4


def test_weights_report_on_a_small_grid() -> None:
    settings = SieveConfig(grid_points=200, min_grid_points=1001)
    report = Pipeline(settings).weights_report()
    names = [sweep.name for sweep in report.sweeps]
    assert names == [
        "dual_form",
        "cos_form",
        "triple_angle",
        "evenness",
        "grid_minimum",
        "weight_transfer",
        "moments_P",
        "moments_Q",
    ]
    assert report.passed, [s.name for s in report.failures()]


def test_counters_survive_concurrent_requests() -> None:
    pipeline = Pipeline(SieveConfig(cache=CacheConfig(enabled=False)))

    def build() -> None:
        for _ in range(200):
            pipeline.moment_table("P", 0)

    workers = [threading.Thread(target=build) for _ in range(8)]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()
    assert pipeline.get_metrics()["tables_built"] == 1600
