from __future__ import annotations

import asyncio
import json
import logging
import os
import threading
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import yaml
from pydantic import ValidationError

from ..errors import ConfigError
from ..pipeline import Pipeline
from .config import DEFAULT_CONFIG_PATH, ROOT, SieveConfig

logger = logging.getLogger(__name__)

CONFIG_PATH_ENV = "CUBICSIEVE_CONFIG_PATH"

# environment variable -> (config field, parser)
ENV_OVERRIDES: Dict[str, tuple[str, Callable[[str], Any]]] = {
    "CUBICSIEVE_DEPTH": ("depth", int),
    "CUBICSIEVE_TOL": ("tolerance", float),
    "CUBICSIEVE_PRECISION": ("precision", int),
    "CUBICSIEVE_FORMAT": ("output_format", str),
}


def _resolve(path: Path | str) -> Path:
    candidate = Path(path)
    return candidate if candidate.is_absolute() else (ROOT / candidate).resolve()


def read_config_file(path: Path) -> Dict[str, Any]:
    """Raw mapping from a .json, .yaml or .yml file; an empty file gives {}."""

    suffix = path.suffix.lower()
    raw_text = path.read_text(encoding="utf-8")
    if not raw_text.strip():
        return {}
    if suffix == ".json":
        data = json.loads(raw_text)
    elif suffix in {".yaml", ".yml"}:
        data = yaml.safe_load(raw_text)
    else:
        raise ConfigError(f"Unsupported config format for file: {path}")
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping at the top level")
    return data


def environment_overrides(environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    env = os.environ if environ is None else environ
    overrides: Dict[str, Any] = {}
    for name, (field, parse) in ENV_OVERRIDES.items():
        value = env.get(name)
        if value is None or not value.strip():
            continue
        try:
            overrides[field] = parse(value.strip())
        except ValueError as exc:
            raise ConfigError(f"{name}={value!r} is not a valid {field}") from exc
    return overrides


class ConfigManager:
    """Loads settings (defaults < file < environment) and owns the shared pipeline."""

    def __init__(self, config_path: Path | str | None = None) -> None:
        env_config_path = os.getenv(CONFIG_PATH_ENV)
        if config_path is not None:
            self.config_path = _resolve(config_path)
        elif env_config_path:
            self.config_path = _resolve(env_config_path)
        else:
            self.config_path = DEFAULT_CONFIG_PATH
        self._config = SieveConfig()
        self._pipeline: Optional[Pipeline] = None
        self._lock = asyncio.Lock()
        self._pipeline_lock = threading.Lock()

    @property
    def config(self) -> SieveConfig:
        return self._config

    @property
    def pipeline(self) -> Pipeline:
        with self._pipeline_lock:
            if self._pipeline is None:
                self._pipeline = Pipeline(settings=self._config)
            return self._pipeline

    def load(self, strict: bool = True) -> SieveConfig:
        """Merge file and environment over the defaults.

        With ``strict`` an unreadable or invalid file raises ConfigError;
        otherwise the defaults are kept and a warning is logged.
        """

        data: Dict[str, Any] = {}
        if self.config_path.exists():
            try:
                data = read_config_file(self.config_path)
            except (OSError, json.JSONDecodeError, yaml.YAMLError, ConfigError) as exc:
                if strict:
                    raise ConfigError(f"Cannot read config {self.config_path}: {exc}") from exc
                logger.warning("ignoring config %s: %s", self.config_path, exc)
                data = {}
        else:
            logger.debug("no config file at %s, using defaults", self.config_path)

        try:
            data.update(environment_overrides())
            self._config = SieveConfig.model_validate(data)
        except (ValidationError, ConfigError) as exc:
            if strict:
                raise ConfigError(f"Invalid configuration: {exc}") from exc
            logger.warning("invalid configuration, using defaults: %s", exc)
            self._config = SieveConfig()
        with self._pipeline_lock:
            self._pipeline = None
        return self._config

    async def reload(self) -> dict:
        async with self._lock:
            self.load(strict=False)
            return {
                "config_loaded": True,
                "config_path": str(self.config_path),
                "config": self._config.model_dump(),
            }
