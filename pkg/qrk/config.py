"""Application configuration using pydantic-settings."""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from QRK_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="QRK_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Truncation
    default_order: int = 24  # x-series order T
    default_q_order: int = 24  # q-valuation order
    default_range: int = 20  # upper bound N of finite-range identities
    inf_cap_factor: int = 10  # `inf` expansions stop after inf_cap_factor * T terms

    # Randomized identities
    seed: int = 20000

    # Verification
    verify_workers: int = 1
    report_timings: bool = False

    # App
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
