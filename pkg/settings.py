#!/usr/bin/env python3
"""
Runtime Settings - environment driven configuration
===================================================

Reads engine tunables from the process environment (optionally seeded
from a ``.env`` file in the working directory) and configures logging.

Environment variables:
- GCA_ITERATION_CAP: insert attempts before a closure sweep gives up (10000)
- GCA_RANDOM_SEED: seed for every randomized probe (20240101)
- GCA_TENSOR_RANDOM_SEEDS: random seeds checked per tensor probe (3)
- GCA_ISO_DEGREE / GCA_ISO_RANGE: intertwiner cross-check bounds (2 / 3)
- GCA_LOG_LEVEL: logging level name (WARNING)
"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from errors import ConfigError

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    """
    Engine tunables.

    Attributes:
        iteration_cap: Maximum insert attempts of one closure run
        random_seed: Seed of the deterministic random generators
        tensor_random_seeds: Extra random seed vectors per tensor probe
        iso_degree: Degree bound D of the intertwiner cross-check
        iso_range: Index bound M of the intertwiner cross-check
        log_level: Name of the logging level
    """
    iteration_cap: int = 10000
    random_seed: int = 20240101
    tensor_random_seeds: int = 3
    iso_degree: int = 2
    iso_range: int = 3
    log_level: str = "WARNING"


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings(env_file: Optional[str] = None) -> Settings:
    """Load settings from ``.env`` (never overriding real variables) and the environment."""
    load_dotenv(env_file, override=False)

    level = os.getenv("GCA_LOG_LEVEL", "WARNING").upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"GCA_LOG_LEVEL is not a logging level: {level!r}")

    return Settings(
        iteration_cap=_int_env("GCA_ITERATION_CAP", 10000, 1),
        random_seed=_int_env("GCA_RANDOM_SEED", 20240101, 0),
        tensor_random_seeds=_int_env("GCA_TENSOR_RANDOM_SEEDS", 3, 0),
        iso_degree=_int_env("GCA_ISO_DEGREE", 2, 1),
        iso_range=_int_env("GCA_ISO_RANGE", 3, 1),
        log_level=level,
    )


def configure_logging(level: str = "WARNING") -> None:
    """Install a single stderr handler on the root logger."""
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


SETTINGS = load_settings()
