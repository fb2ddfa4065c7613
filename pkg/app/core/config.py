"""
Configuration management for the matpow toolkit.
"""
import os
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment variable support (prefix MATPOW_)."""

    model_config = SettingsConfigDict(
        env_prefix="MATPOW_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Execution
    threads: Optional[int] = Field(default=None, ge=1, description="Worker cap for search/oracle (default: available parallelism)")
    debug: bool = Field(default=False, description="Debug mode: re-verify incremental objective after every accepted move")

    # Logging
    log_level: str = Field(default="INFO", description="Logging level name")
    log_file: str = Field(default="", description="Optional log file path (empty disables file logging)")

    # Exact arithmetic
    int_bits: int = Field(default=127, ge=63, description="ExactInt magnitude limit, |v| < 2**int_bits")

    # Real-valued diagnostics
    real_tolerance: float = Field(default=1e-9, gt=0, description="Absolute tolerance for real-valued checks")
    mu_denominator_eps: float = Field(default=1e-12, gt=0, description="Degenerate-variance threshold for mu_implied")

    # Oracle
    oracle_max_n: int = Field(default=3, ge=1, le=3, description="Largest n the exhaustive oracle accepts")

    # HTTP service
    app_title: str = Field(default="matpow", description="Service title")

    @property
    def worker_count(self) -> int:
        """Resolved worker count (never below 1)."""
        if self.threads:
            return self.threads
        return os.cpu_count() or 1

    @property
    def int_limit(self) -> int:
        """Exclusive magnitude bound for ExactInt values."""
        return 1 << self.int_bits


# Global settings instance
settings = Settings()
