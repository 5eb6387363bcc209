"""Application settings using Pydantic Settings."""

import os
from fractions import Fraction
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from kcport.entities.simplex_grid import PriorDensity, default_grid_step


class AppSettings(BaseSettings):
    """Main application settings, read from KCPORT_* variables and `.env`."""

    model_config = SettingsConfigDict(
        env_prefix="KCPORT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    threads: int = Field(
        default=0,
        ge=0,
        description="Worker threads for subsequence scans (0 = one per CPU)",
    )
    log_level: str = Field(
        default="INFO",
        description="Logging level",
    )
    log_json: bool = Field(
        default=False,
        description="Render log events as JSON lines",
    )
    report_decimals: int = Field(
        default=6,
        ge=0,
        description="Decimal places of report.csv values",
    )
    path_significant_digits: int = Field(
        default=17,
        ge=1,
        le=17,
        description="Significant digits of per-period path files",
    )
    refine_tol: float = Field(
        default=1e-10,
        gt=0,
        description="Tolerance of the off-grid ascent",
    )
    kelly_seed_step: float = Field(
        default=0.05,
        gt=0,
        le=1,
        description="Grid pitch seeding the k-log-optimal ascent",
    )
    kt_test_tuples: int = Field(
        default=1000,
        ge=1,
        description="Random test tuples used for the Kuhn-Tucker certificate",
    )
    default_density: PriorDensity = Field(
        default=PriorDensity.UNIFORM,
        description="Prior density when --density is not given",
    )

    @property
    def worker_count(self) -> int:
        """Resolved worker count.

        Returns:
            `threads`, or the CPU count when it is 0.
        """
        return self.threads or os.cpu_count() or 1

    @property
    def report_float_format(self) -> str:
        """printf format of report values."""
        return f"%.{self.report_decimals}f"

    @property
    def path_float_format(self) -> str:
        """printf format of path values."""
        return f"%.{self.path_significant_digits}g"

    @property
    def seed_step(self) -> Fraction:
        """Kelly seed pitch as an exact fraction."""
        return Fraction(str(self.kelly_seed_step))

    @staticmethod
    def default_grid_step(m: int) -> Fraction:
        """Grid pitch used when none is requested.

        Args:
            m: Asset count.

        Returns:
            1/40 for four assets, 1/100 otherwise.
        """
        return default_grid_step(m)


@lru_cache
def get_settings() -> AppSettings:
    """Get cached settings instance.

    Returns:
        Application settings.
    """
    return AppSettings()
