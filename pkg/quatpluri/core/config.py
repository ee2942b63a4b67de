"""Configuration management for quatpluri."""

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
DEFAULT_SEED = 0
DEFAULT_CASES = 50
DEFAULT_LOG_LEVEL = "WARNING"


class Settings(BaseModel):
    """Validated view of the YAML configuration file."""

    model_config = ConfigDict(populate_by_name=True, extra="ignore")

    tolerance: float = Field(default=DEFAULT_TOLERANCE, gt=0.0)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    cases: int = Field(default=DEFAULT_CASES, ge=1)
    log_level: str = Field(default=DEFAULT_LOG_LEVEL, alias="log-level")


def _get_config_paths() -> list[str]:
    """Get list of config file paths in order of precedence (highest to lowest)."""
    home = Path.home()
    xdg_config = os.getenv("XDG_CONFIG_HOME", "")

    paths = []

    # XDG standard location (if set)
    if xdg_config:
        paths.append(str(Path(xdg_config) / "quatpluri" / "config.yaml"))

    # Global user config (~/.config/quatpluri/config.yaml)
    paths.append(str(home / ".config" / "quatpluri" / "config.yaml"))

    # Home dotfile (~/.quatpluri.yaml)
    paths.append(str(home / ".quatpluri.yaml"))

    # Local config in current directory
    paths.append("./.quatpluri.yaml")

    return paths


def load_config() -> dict[str, Any]:
    """Load configuration from file.

    Returns the first config file found, following precedence order.
    Returns empty dict if no config file found.
    """
    for config_path in _get_config_paths():
        if Path(config_path).exists():
            try:
                with open(config_path) as f:
                    data = yaml.safe_load(f) or {}
            except (OSError, yaml.YAMLError) as e:
                # If we can't read it, log and try next path
                logger.warning(f"Failed to load config from {config_path}: {e}")
                continue
            if not isinstance(data, dict):
                logger.warning(f"Ignoring {config_path}: expected a mapping, got {type(data).__name__}")
                continue
            return data

    return {}


def load_settings() -> Settings:
    """Load and validate settings.

    Priority:
    1. Environment variables (QUATPLURI_TOL, QUATPLURI_SEED, QUATPLURI_CASES,
       QUATPLURI_LOG_LEVEL)
    2. Config file
    3. Built-in defaults

    Invalid values fall back to the defaults with a warning.

    Returns:
        Settings instance
    """
    raw = dict(load_config())
    env_keys = {
        "QUATPLURI_TOL": "tolerance",
        "QUATPLURI_SEED": "seed",
        "QUATPLURI_CASES": "cases",
        "QUATPLURI_LOG_LEVEL": "log-level",
    }
    for env_name, key in env_keys.items():
        value = os.getenv(env_name)
        if value:
            raw[key] = value

    try:
        return Settings.model_validate(raw)
    except ValidationError as e:
        logger.warning(f"Ignoring invalid configuration: {e}")
        return Settings()


def get_default_tolerance() -> float:
    """Get the default structural tolerance (absolute, max-norm).

    Returns:
        Tolerance from environment, config, or 1e-9
    """
    return load_settings().tolerance


def get_default_seed() -> int:
    """Get the default verification seed.

    Returns:
        Seed from environment, config, or 0
    """
    return load_settings().seed


def get_default_cases() -> int:
    """Get the default number of random cases per verification check.

    Returns:
        Case count from environment, config, or 50
    """
    return load_settings().cases


def get_log_level() -> str:
    """Get the configured log level name.

    Returns:
        Log level name, e.g. "WARNING"
    """
    return load_settings().log_level.upper()
