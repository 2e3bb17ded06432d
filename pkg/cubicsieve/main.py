"""
Cubic Sieve Verification API

FastAPI service exposing the moment tables, the gamma routes and the verification
suites as JSON reports.
"""

from __future__ import annotations

import logging
from contextlib import asynccontextmanager
from typing import Any, Dict

from fastapi import FastAPI

from . import __version__
from .api.router import _ensure_loaded
from .api.router import router as sieve_router
from .logging_config import configure_logging

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging()
    try:
        _ensure_loaded()
    except Exception:  # noqa: BLE001 - endpoints load lazily as well
        logger.exception("settings could not be loaded at startup")
    yield


app = FastAPI(title="Cubic Sieve Verification API", version=__version__, lifespan=lifespan)
app.include_router(sieve_router)


@app.get("/")
async def root() -> Dict[str, Any]:
    return {
        "message": "Cubic Sieve Verification API",
        "version": __version__,
        "endpoints": {
            "moments": "/api/sieve/moments/{weight}?count=",
            "gammas": "/api/sieve/gammas?depth=",
            "verify": "/api/sieve/verify/{target}?depth=&tol=",
            "metrics": "/api/sieve/metrics",
            "reload": "/api/sieve/reload",
            "health": "/health",
        },
    }


@app.get("/health")
async def health() -> Dict[str, str]:
    return {"status": "healthy"}
