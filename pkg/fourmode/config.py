"""Configuration management for the four-mode toolkit."""

from typing import List, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .core.constants import (
    DEFAULT_CONE_TOLERANCE,
    DEFAULT_MAX_DENOMINATOR,
    DEFAULT_TRANSFER_TOLERANCE,
)


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="FOURMODE_",
        case_sensitive=False,
        extra="ignore",
    )

    # Core settings
    environment: str = "development"
    log_level: str = "WARNING"

    # Numerical tolerances
    transfer_tolerance: float = Field(default=DEFAULT_TRANSFER_TOLERANCE, gt=0)
    cone_tolerance: float = Field(default=DEFAULT_CONE_TOLERANCE, gt=0)
    max_denominator: int = Field(default=DEFAULT_MAX_DENOMINATOR, ge=1)

    # Simulation
    default_steps: int = Field(default=2000, ge=2)
    oracle_method: Literal["spectral", "rk4"] = "spectral"

    # Design search
    optimizer_starts: int = Field(default=32, ge=1)
    optimizer_max_evaluations: int = Field(default=20000, ge=10)
    match_tolerance: float = Field(default=1e-5, gt=0)
    success_infidelity: float = Field(default=1e-8, gt=0)

    # HTTP surface (fourmode serve)
    host: str = "127.0.0.1"
    port: int = 8000
    debug: bool = False
    secret_key: str = "change-me"
    allowed_origins: List[str] = ["http://localhost:3000", "http://localhost:5173"]
    rate_limit_per_minute: int = 60


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance."""
    return settings
