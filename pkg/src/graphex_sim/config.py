"""
Configuration management for graphex-sim.

Uses pydantic-settings for environment-based configuration.
Every variable can be set as GRAPHEX_<FIELD> in the environment or in a .env file.
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI settings loaded from environment variables."""

    # Logging Configuration
    log_level: str = "INFO"
    log_format: Literal["beautiful", "minimal", "json"] = "beautiful"
    log_console: bool = True
    log_colors: bool = True
    log_file_path: Optional[Path] = None

    # Replicate runner
    threads: int = Field(default=1, ge=1)

    # Canonical forms and censuses
    key_vertex_limit: int = Field(default=9, ge=1)

    # Graphex limits (hub threshold in sqrt(l_n)-rescaled degree units)
    hub_threshold: float = Field(default=0.1, gt=0.0)

    # Statistics
    bootstrap_resamples: int = Field(default=200, ge=1)

    # Generic graphex sampling
    truncation_budget: float = Field(default=1e-3, gt=0.0)
    max_multiplicity: int = Field(default=64, ge=1)
    validation_resolution: int = Field(default=512, ge=16)

    # Generators
    grg_pair_threshold: int = Field(default=20_000, ge=1)

    # Labeling
    label_retry_limit: int = Field(default=16, ge=1)

    model_config = SettingsConfigDict(
        env_prefix="GRAPHEX_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


# Global settings instance
settings = Settings()
