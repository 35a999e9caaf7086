"""Configuration management using Pydantic Settings."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine and command-line settings."""

    model_config = SettingsConfigDict(
        env_prefix="ARQ_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = Field(default="warning", description="Logging level")
    log_json: bool = Field(default=False, description="Render log records as JSON")

    # Determinism
    seed: int = Field(
        default=20240531,
        description="Seed for every randomized internal (idempotent sampling, iso trials)",
    )

    # Knitting
    knit_budget: int = Field(
        default=200,
        ge=1,
        description="Maximum number of triangle constructions per component",
    )
    shift_window: int = Field(
        default=2,
        ge=0,
        description="Shifts [-w, w] tried when matching a new vertex against known classes",
    )

    # Decomposition
    idempotent_attempts: int = Field(
        default=24,
        ge=1,
        description="Random endomorphisms sampled per idempotent search",
    )
    lift_iterations: int = Field(
        default=64,
        ge=1,
        description="Maximum e <- 3e^2 - 2e^3 iterations when lifting an idempotent",
    )
    iso_trials: int = Field(
        default=6,
        ge=0,
        description="Random evaluations before the exact determinant fallback",
    )

    # Output
    output_format: str = Field(default="text", description="Default CLI output format")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
