from __future__ import annotations

import logging
from threading import Lock
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from .api.config import SieveConfig
from .mapping import MappingReport, verify_decomposition, weight_transfer_check
from .moments import CacheStatistics, MomentTable, TableCache, WeightId
from .moments import moment_table as build_moment_table
from .numeric import (
    OrthogonalityReport,
    SweepResult,
    WeightsReport,
    cos_form_sweep,
    dual_form_sweep,
    evenness_sweep,
    grid_minimum,
    moment_agreement,
    orthogonality_sweep,
    triple_angle_sweep,
)
from .qfield import SQRT2
from .recurrence import (
    ConjectureSummary,
    ExactOrthogonality,
    RecurrenceTable,
    RoutesReport,
    build_recurrence_table,
    compare_routes,
    exact_orthogonality,
    gamma_direct,
    verify_conjecture,
)

logger = logging.getLogger(__name__)

CORRUPTION = SQRT2 / 1000


class OrthogonalitySummary(BaseModel):
    depth: int
    exact: ExactOrthogonality
    numeric: OrthogonalityReport
    passed: bool


class Pipeline:
    """Main interface: cached moment tables, both gamma routes and every verification."""

    def __init__(self, settings: Optional[SieveConfig] = None) -> None:
        self.settings = settings or SieveConfig()
        self.cache = TableCache()
        self.metrics: Dict[str, Any] = {
            "tables_built": 0,
            "determinants": 0,
            "quadratures": 0,
            "check_failures": 0,
        }
        self._metrics_lock = Lock()

    # -- exact layer ------------------------------------------------------

    def moment_table(self, weight: WeightId | str, count: int) -> MomentTable:
        """mu_0..mu_{2 count}; served from the cache when a deep enough table exists."""

        wid = WeightId(weight)
        if self.settings.cache.enabled:
            cached = self.cache.get(wid, count)
            if cached is not None:
                return cached
        table = build_moment_table(wid, count)
        self._bump("tables_built")
        if self.settings.cache.enabled:
            self.cache.put(table)
        return table

    def _p_table(self, count: int, corrupt_moment: Optional[int]) -> MomentTable:
        table = self.moment_table(WeightId.P, count)
        if corrupt_moment is None:
            return table
        if not 0 <= corrupt_moment <= table.max_index:
            raise ValueError(f"corrupt_moment {corrupt_moment} outside mu_0..mu_{table.max_index}")
        logger.warning("perturbing mu_%d of the P table", corrupt_moment)
        return table.with_moment(corrupt_moment, table[corrupt_moment] + CORRUPTION)

    def recurrence_table(self, depth: int) -> RecurrenceTable:
        ledger = build_recurrence_table(self.moment_table(WeightId.Q, depth), depth)
        self._bump("determinants", depth + 1)
        return ledger

    def direct_gammas(self, highest: int, corrupt_moment: Optional[int] = None) -> List:
        gamma = gamma_direct(self._p_table(highest, corrupt_moment), highest)
        self._bump("determinants", highest + 1)
        return gamma

    def gammas_both_routes(self, depth: int, corrupt_moment: Optional[int] = None) -> RoutesReport:
        """Chain route through N = depth triples next to the direct route up to gamma_{3N+2}."""

        ledger = self.recurrence_table(depth)
        direct = self.direct_gammas(3 * depth + 2, corrupt_moment)
        comparison = compare_routes(ledger.gamma, direct)
        logger.info("routes compared up to gamma_%d: %s", comparison.depth, "match" if comparison.all_match else "MISMATCH")
        self._count_failures(len(comparison.mismatches()))
        return RoutesReport(
            depth=depth,
            ledger=ledger.ledger_rows(),
            comparison=comparison,
            passed=comparison.all_match,
        )

    def conjecture_report(self, depth: int, corrupt_moment: Optional[int] = None) -> ConjectureSummary:
        ledger = self.recurrence_table(depth)
        direct = self.direct_gammas(3 * depth + 2, corrupt_moment)
        chain_report = verify_conjecture(ledger.gamma)
        direct_report = verify_conjecture(direct)
        routes = compare_routes(ledger.gamma, direct)
        passed = chain_report.passed and direct_report.passed and routes.all_match
        self._count_failures(len(chain_report.failures()) + len(direct_report.failures()) + len(routes.mismatches()))
        logger.info("conjecture to depth %d: %s", depth, "pass" if passed else "FAIL")
        return ConjectureSummary(depth=depth, chain=chain_report, direct=direct_report, routes=routes, passed=passed)

    def mapping_report(self, depth: int, corrupt_moment: Optional[int] = None) -> MappingReport:
        """Decomposition for n = 0..depth-1 with gamma from the P moments."""

        report = verify_decomposition(self.direct_gammas(3 * depth, corrupt_moment), depth)
        self._count_failures(len(report.failures()))
        return report

    # -- numeric oracle ---------------------------------------------------

    def orthogonality_report(
        self, depth: int, tolerance: Optional[float] = None, corrupt_moment: Optional[int] = None
    ) -> OrthogonalitySummary:
        tol = tolerance or self.settings.tolerance
        gamma = self.direct_gammas(depth, corrupt_moment)
        exact = exact_orthogonality(self._p_table(depth, corrupt_moment), gamma, depth)
        numeric = orthogonality_sweep(
            gamma,
            depth,
            tol=tol,
            dps=self.settings.precision,
            method=self.settings.quad_method,
            max_degree=self.settings.quad_max_degree,
        )
        self._bump("quadratures", len(numeric.rows))
        self._count_failures(len(exact.failures()) + len(numeric.failures()))
        return OrthogonalitySummary(depth=depth, exact=exact, numeric=numeric, passed=exact.passed and numeric.passed)

    def weights_report(self, tolerance: Optional[float] = None) -> WeightsReport:
        """Closed forms, triple angle, evenness, grid minimum, weight transfer and moments k <= 12."""

        s = self.settings
        tol = tolerance or s.tolerance
        dps = s.precision
        sweeps: List[SweepResult] = [
            dual_form_sweep(s.grid_points, min(tol, 1e-12), dps),
            cos_form_sweep(s.grid_points, min(tol, 1e-12), dps),
            triple_angle_sweep(s.grid_points, tol, dps),
            evenness_sweep(s.grid_points, min(tol, 1e-13), dps),
            grid_minimum(s.min_grid_points, 1e-9, dps),
        ]
        transfer = weight_transfer_check(s.grid_points, tol, dps)
        sweeps.append(
            SweepResult(
                name="weight_transfer",
                points=s.grid_points - len(transfer.skipped),
                max_error=transfer.max_error,
                tolerance=tol,
                passed=transfer.passed,
                detail=f"skipped x = {', '.join(transfer.skipped)}" if transfer.skipped else None,
            )
        )
        for weight in (WeightId.P, WeightId.Q):
            sweeps.append(
                moment_agreement(weight, 12, tol, dps, method=s.quad_method, max_degree=s.quad_max_degree)
            )
            self._bump("quadratures", 13)
        report = WeightsReport(precision=dps, sweeps=sweeps, passed=all(x.passed for x in sweeps))
        self._count_failures(len(report.failures()))
        return report

    # -- bookkeeping ------------------------------------------------------

    def _bump(self, key: str, amount: int = 1) -> None:
        with self._metrics_lock:
            self.metrics[key] += amount

    def _count_failures(self, count: int) -> None:
        self._bump("check_failures", count)

    def get_cache_statistics(self) -> CacheStatistics:
        return self.cache.get_statistics()

    def get_metrics(self) -> Dict[str, Any]:
        with self._metrics_lock:
            return dict(self.metrics)
