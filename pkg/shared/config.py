"""
Run configuration - defaults, optional JSON config file, environment, flags
Precedence (lowest to highest): defaults < config file < environment < flags
"""
import os
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from shared.errors import SpecValueError

logger = logging.getLogger("RunConfig")

DEFAULT_CAP = 8_000_000

# environment variable -> RunConfig field
ENV_KEYS: Dict[str, str] = {
    "GROWTHLAB_CAP": "cap",
    "GROWTHLAB_WORKERS": "workers",
    "GROWTHLAB_PRECISION": "precision",
    "GROWTHLAB_LOG_LEVEL": "log_level",
}

# config-file keys spelled like the CLI flags -> RunConfig field
FLAG_KEYS: Dict[str, str] = {
    "out": "output_format",
    "output": "output_path",
}


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    DOT = "dot"


class RunConfig(BaseModel):
    cap: int = Field(DEFAULT_CAP, description="Maximum number of elements held by one enumeration")
    workers: int = Field(1, description="Concurrent workers per BFS layer")
    precision: int = Field(40, description="Significant digits for logarithms and roots")
    output_format: OutputFormat = OutputFormat.CSV
    output_path: Optional[str] = None
    log_level: str = "INFO"

    model_config = {"frozen": True}

    @field_validator("cap", "workers")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be positive")
        return value

    @field_validator("precision")
    @classmethod
    def _enough_digits(cls, value: int) -> int:
        if value < 12:
            raise ValueError("precision must be >= 12 digits")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value}")
        return value


def _read_config_file(path: str) -> Dict[str, Any]:
    config_path = Path(path)
    try:
        with open(config_path) as f:
            data = json.load(f)
    except FileNotFoundError:
        raise SpecValueError(f"config file not found: {config_path}")
    except json.JSONDecodeError as e:
        raise SpecValueError(f"config file {config_path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise SpecValueError(f"config file {config_path} must hold a JSON object")
    # flag spelling (out, output-format, verbose) and field spelling (output_format) both accepted
    values: Dict[str, Any] = {}
    for key, value in data.items():
        key = key.replace("-", "_")
        if key == "verbose":
            if value:
                values["log_level"] = "DEBUG"
            continue
        values[FLAG_KEYS.get(key, key)] = value
    return values


def _read_environment() -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for env_key, field in ENV_KEYS.items():
        raw = os.getenv(env_key)
        if raw is None or raw == "":
            continue
        if field == "log_level":
            values[field] = raw
            continue
        try:
            values[field] = int(raw)
        except ValueError:
            logger.warning(f"Invalid {env_key} '{raw}', keeping the configured value")
    return values


def load_config(config_file: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Build the effective RunConfig; `overrides` holds explicit CLI flags (None = unset)."""
    load_dotenv()

    merged: Dict[str, Any] = {}
    if config_file:
        merged.update(_read_config_file(config_file))
    merged.update(_read_environment())
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})

    known = set(RunConfig.model_fields)
    unknown = sorted(set(merged) - known)
    if unknown:
        logger.warning(f"Ignoring unknown configuration keys: {', '.join(unknown)}")
    try:
        return RunConfig(**{k: v for k, v in merged.items() if k in known})
    except ValidationError as e:
        raise SpecValueError(f"invalid configuration: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}")
