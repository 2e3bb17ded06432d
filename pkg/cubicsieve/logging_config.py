from __future__ import annotations

import logging
import os
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVEL_ENV = "CUBICSIEVE_LOG_LEVEL"


def configure_logging(level: str | None = None) -> None:
    """Install a single stderr handler; reports own stdout."""

    chosen = (level or os.getenv(LOG_LEVEL_ENV) or "WARNING").upper()
    numeric = logging.getLevelName(chosen)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {chosen}")

    root = logging.getLogger("cubicsieve")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(numeric)
    root.propagate = False
