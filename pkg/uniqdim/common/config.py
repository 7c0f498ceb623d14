"""
Configuration management with validation.

Uses pydantic for type validation; values come from the process environment
(optionally seeded from a .env file via python-dotenv).
"""
import os
from pathlib import Path
from typing import Literal, Optional

import dotenv
from pydantic import BaseModel, Field, field_validator, model_validator

from uniqdim.common.exceptions import ConfigurationError

ENV_PREFIX = "UNIQDIM_"

# Single-word vertex sets: a neighbor row and a subset both fit 64 bits.
VERTEX_CAP = 64

# Largest order the built-in enumerator accepts.
ENUMERATION_CAP = 8


def _env(name: str, default: str) -> str:
    return os.getenv(f"{ENV_PREFIX}{name}", default)


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(f"{ENV_PREFIX}{name}")
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


class SolverConfig(BaseModel):
    """Exact solver configuration."""

    randomly_k_max_order: int = Field(default_factory=lambda: int(_env("RANDOMLY_K_MAX_ORDER", "20")))
    self_check: bool = Field(default_factory=lambda: _env_bool("SELF_CHECK", False))
    # Start the cardinality loop at the smallest k with n <= k + d^k.
    order_bound_pruning: bool = Field(default_factory=lambda: _env_bool("ORDER_BOUND_PRUNING", False))

    @field_validator('randomly_k_max_order')
    @classmethod
    def validate_randomly_k_max_order(cls, v):
        if v < 0:
            raise ValueError(f"randomly_k_max_order must be >= 0, got {v}")
        return v


class SearchConfig(BaseModel):
    """Sweep / search configuration."""

    jobs: int = Field(default_factory=lambda: int(_env("JOBS", "1")))
    batch_size: int = Field(default_factory=lambda: int(_env("BATCH_SIZE", "4096")))
    checkpoint_every: int = Field(default_factory=lambda: int(_env("CHECKPOINT_EVERY", "50000")))
    data_dir: Path = Field(default_factory=lambda: Path(_env("DATA_DIR", str(Path.home() / ".cache" / "uniqdim"))))
    progress: bool = Field(default_factory=lambda: _env_bool("PROGRESS", False))

    @field_validator('jobs', 'batch_size', 'checkpoint_every')
    @classmethod
    def validate_positive(cls, v, info):
        if v < 1:
            raise ValueError(f"{info.field_name} must be >= 1, got {v}")
        return v


class LoggingConfig(BaseModel):
    """Logging configuration."""

    log_dir: Path = Field(default_factory=lambda: Path(_env("LOG_DIR", str(Path.home() / ".cache" / "uniqdim" / "logs"))))
    log_level: str = Field(default_factory=lambda: _env("LOG_LEVEL", "WARNING"))
    log_to_file: bool = Field(default_factory=lambda: _env_bool("LOG_TO_FILE", False))
    max_log_size_mb: int = Field(default=50)

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        v = v.upper()
        if v not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v


class Settings(BaseModel):
    """Global uniqdim settings."""

    solver: SolverConfig = Field(default_factory=SolverConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


# Subcommands that generate their own graphs; an input source is optional.
GENERATING_SUBCOMMANDS = ('construct', 'search-n0')


class RunConfig(BaseModel):
    """One CLI invocation: subcommand, input source, format, workers, flags."""

    subcommand: Literal['dim', 'bases', 'audit', 'construct', 'search-n0', 'extend', 'convert']
    input_path: Optional[Path] = None
    inline_edges: Optional[str] = None
    use_stdin: bool = False
    exhaustive_order: Optional[int] = None
    input_format: Literal['graph6', 'edgelist'] = 'graph6'
    jobs: int = 1
    flags: dict = Field(default_factory=dict)

    @field_validator('jobs')
    @classmethod
    def validate_jobs(cls, v):
        if v < 1:
            raise ValueError(f"worker count must be >= 1, got {v}")
        return v

    @model_validator(mode='after')
    def exactly_one_source(self):
        sources = sum([
            self.input_path is not None,
            self.inline_edges is not None,
            self.use_stdin,
            self.exhaustive_order is not None,
        ])
        if self.subcommand in GENERATING_SUBCOMMANDS:
            if sources > 1:
                raise ValueError(f"{self.subcommand} takes at most one input source")
        elif sources != 1:
            raise ValueError("exactly one input source required (file, inline edge list, or stdin)")
        return self


# Global settings instance
_settings: Optional[Settings] = None


def _build_settings() -> Settings:
    dotenv.load_dotenv()
    try:
        return Settings()
    except ValueError as e:
        raise ConfigurationError(f"Invalid configuration: {e}") from e


def get_settings() -> Settings:
    """
    Get global settings instance (singleton).

    Settings are loaded once and cached. Environment variables
    are read on first access.

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = _build_settings()
    return _settings


def reload_settings() -> Settings:
    """
    Reload settings from environment variables.

    Useful for testing.

    Returns:
        New Settings instance
    """
    global _settings
    _settings = _build_settings()
    return _settings
