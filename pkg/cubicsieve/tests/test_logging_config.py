from __future__ import annotations

import logging

import pytest

from cubicsieve.logging_config import configure_logging


def test_single_handler_and_level(monkeypatch) -> None:
    monkeypatch.delenv("CUBICSIEVE_LOG_LEVEL", raising=False)
    configure_logging("debug")
    configure_logging("INFO")
    logger = logging.getLogger("cubicsieve")
    assert len(logger.handlers) == 1
    assert logger.level == logging.INFO

    monkeypatch.setenv("CUBICSIEVE_LOG_LEVEL", "ERROR")
    configure_logging()
    assert logger.level == logging.ERROR


def test_unknown_level() -> None:
    with pytest.raises(ValueError):
        configure_logging("chatty")
