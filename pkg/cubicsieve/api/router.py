from __future__ import annotations

import logging
from threading import Lock
from typing import Any, Callable, Dict

from fastapi import APIRouter, HTTPException, Query

from ..errors import SieveError
from ..moments import WeightId
from ..reporting import to_document
from .manager import ConfigManager
from .validator import TARGETS

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/sieve", tags=["sieve"])

_manager = ConfigManager()
_loaded = False
_load_lock = Lock()

# request limits for the exact layer
MAX_DEPTH = 30
MAX_COUNT = 200


def _ensure_loaded() -> None:
    """Load settings on first use; a broken file leaves the defaults in place."""
    global _loaded
    with _load_lock:
        if not _loaded:
            _manager.load(strict=False)
            _loaded = True


def _run(label: str, action: Callable[[], Any]) -> Any:
    try:
        return action()
    except SieveError as exc:
        logger.warning("%s failed: %s", label, exc)
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _check_depth(depth: int, floor: int = 1) -> None:
    if not floor <= depth <= MAX_DEPTH:
        raise HTTPException(status_code=400, detail=f"depth must lie in [{floor}, {MAX_DEPTH}]")


@router.get("/moments/{weight}")
def moments(weight: str, count: int = Query(default=3)) -> Dict[str, Any]:
    """Exact moment table mu_0..mu_{2 count} of w_P or w_Q."""
    _ensure_loaded()
    if weight not in {w.value for w in WeightId}:
        raise HTTPException(status_code=400, detail="weight must be P or Q")
    if not 0 <= count <= MAX_COUNT:
        raise HTTPException(status_code=400, detail=f"count must lie in [0, {MAX_COUNT}]")
    table = _run("moments", lambda: _manager.pipeline.moment_table(weight, count))
    return table.to_json()


@router.get("/gammas")
def gammas(depth: int = Query(default=4)) -> Dict[str, Any]:
    """Hankel ledger of the chain route and both gamma routes side by side."""
    _ensure_loaded()
    _check_depth(depth)
    return to_document(_run("gammas", lambda: _manager.pipeline.gammas_both_routes(depth)))


@router.get("/verify/{target}")
def verify(target: str, depth: int = Query(default=4), tol: float | None = Query(default=None)) -> Dict[str, Any]:
    """One verification suite; the body carries "passed" like the CLI report."""
    _ensure_loaded()
    if target not in TARGETS:
        raise HTTPException(status_code=400, detail=f"target must be one of {', '.join(TARGETS)}")
    if tol is not None and tol <= 0:
        raise HTTPException(status_code=400, detail="tol must be positive")
    pipeline = _manager.pipeline
    if target == "conjecture":
        _check_depth(depth)
        report = _run(target, lambda: pipeline.conjecture_report(depth))
    elif target == "mapping":
        _check_depth(depth)
        report = _run(target, lambda: pipeline.mapping_report(depth))
    elif target == "orthogonality":
        _check_depth(depth, floor=0)
        report = _run(target, lambda: pipeline.orthogonality_report(depth, tol))
    else:
        report = _run(target, lambda: pipeline.weights_report(tol))
    return to_document(report)


@router.get("/metrics")
async def metrics() -> Dict[str, Any]:
    """Pipeline counters and moment-table cache statistics."""
    _ensure_loaded()
    pipeline = _manager.pipeline
    cache_stats = pipeline.get_cache_statistics()
    return {
        "pipeline": pipeline.get_metrics(),
        "cache": {
            "hits": cache_stats.hits,
            "misses": cache_stats.misses,
            "size": cache_stats.size,
            "hit_rate": cache_stats.hit_rate(),
        },
        "settings": _manager.config.model_dump(),
    }


@router.post("/reload")
async def reload_config() -> Dict[str, Any]:
    """Re-read settings and drop every cached table."""
    global _loaded
    body = await _manager.reload()
    _loaded = True
    return body
