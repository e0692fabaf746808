"""
Runtime Configuration Management

Provides centralized configuration handling for the PSL2 toolkit with
environment-aware settings, validation, and documented defaults.

Design Considerations:
- Budgets bound resource use, never the mathematical answer
- Environment overrides use the PSL2_ prefix and an optional .env file
- Validation rejects nonsensical limits at load time
"""

import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class PSL2Settings(BaseSettings):
    """
    Toolkit configuration with validated defaults.

    Field arithmetic, enumeration and the randomized construction fallbacks
    all read their limits from here, so a single object controls how much
    work a run is allowed to do.
    """
    LOG_LEVEL: str = Field(
        default="WARNING",
        description="Logging level for diagnostics on standard error"
    )

    # Field arithmetic
    FIELD_SIZE_LIMIT: int = Field(
        default=2 ** 20,
        description="Largest supported field size q"
    )
    ARITHMETIC_TABLE_LIMIT: int = Field(
        default=256,
        description="Fields with q at most this size precompute full add/mul tables"
    )

    # Enumeration and search budgets
    ENUMERATION_BUDGET: int = Field(
        default=10 ** 7,
        description="Maximum group order for enumeration and subgroup closures"
    )
    RETRY_BUDGET: int = Field(
        default=64,
        description="Randomized conjugation attempts per construction"
    )
    BRUTE_GENERATION_LIMIT: int = Field(
        default=5000,
        description="Maximum group order for brute-force generation cross-checks"
    )
    CONJUGACY_CHECK_QMAX: int = Field(
        default=17,
        description="Largest q for exhaustive conjugacy cross-checks"
    )
    DEFAULT_SEED: int = Field(
        default=1,
        description="Seed used when no seed is given explicitly"
    )

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        """Normalize and validate the logging level name."""
        level = value.upper().strip()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown logging level: {value}")
        return level

    @field_validator(
        "FIELD_SIZE_LIMIT",
        "ARITHMETIC_TABLE_LIMIT",
        "ENUMERATION_BUDGET",
        "RETRY_BUDGET",
        "BRUTE_GENERATION_LIMIT",
        "CONJUGACY_CHECK_QMAX",
    )
    @classmethod
    def validate_positive(cls, value: int) -> int:
        """Budgets and limits must be positive."""
        if value <= 0:
            raise ValueError("limits must be positive integers")
        return value

    @field_validator("FIELD_SIZE_LIMIT")
    @classmethod
    def validate_field_width(cls, value: int) -> int:
        """All field arithmetic is carried out in 64-bit range."""
        if value > 2 ** 31:
            raise ValueError("FIELD_SIZE_LIMIT must keep q*q within 64-bit range")
        return value

    model_config = SettingsConfigDict(
        env_prefix="PSL2_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_settings() -> PSL2Settings:
    """
    Retrieve validated settings.

    Returns:
        Cached settings object

    Raises:
        ValidationError: If an override fails validation
    """
    return PSL2Settings()
