"""Hindsight benchmark and regret entities."""

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kcport.entities.portfolio import Portfolio, frozen_array


class KccBenchmark(BaseModel):
    """Best k-cyclic constant strategy for a fully observed sequence."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(description="Cycle length", examples=[2], ge=1)
    portfolios: tuple[Portfolio, ...] = Field(description="One portfolio per cycle position")
    subsequence_log_wealth: tuple[float, ...] = Field(
        description="Log-wealth of each position's portfolio on its own subsequence",
    )
    log_wealth: float = Field(description="Log of the benchmark's cumulative wealth")
    refined: bool = Field(default=False, description="Whether continuum refinement was applied")

    @model_validator(mode="after")
    def validate_tuple(self) -> "KccBenchmark":
        """Check one portfolio and one log-wealth per position."""
        if len(self.portfolios) != self.k or len(self.subsequence_log_wealth) != self.k:
            msg = f"benchmark needs exactly {self.k} portfolios and subsequence values"
            raise ValueError(msg)
        if abs(self.log_wealth - sum(self.subsequence_log_wealth)) > 1e-9 * max(
            1.0, abs(self.log_wealth)
        ):
            msg = "benchmark log_wealth must equal the sum of its subsequence optima"
            raise ValueError(msg)
        return self

    def portfolio_matrix(self) -> np.ndarray:
        """k x m matrix of the cycle's portfolios."""
        return np.array([p.weights for p in self.portfolios], dtype=np.float64)


class RegretSeries(BaseModel):
    """Per-horizon regret in growth rate against a benchmark, with the theoretical bound."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(description="Cycle length of the benchmark", ge=1)
    horizons: np.ndarray = Field(description="Horizons n = 1..N")
    regret: np.ndarray = Field(description="W_n(benchmark) - W_n(strategy), nats/period")
    bound: np.ndarray = Field(description="Regret bound divided by n, nats/period")

    @field_validator("horizons", "regret", "bound", mode="before")
    @classmethod
    def convert_series(cls, value: Any) -> np.ndarray:
        """Coerce series into read-only vectors."""
        return frozen_array(value, ndim=1, name="series")

    @model_validator(mode="after")
    def validate_lengths(self) -> "RegretSeries":
        """Check that the three series align."""
        if not (self.horizons.shape == self.regret.shape == self.bound.shape):
            msg = "horizons, regret and bound must have equal length"
            raise ValueError(msg)
        return self

    @property
    def ratio(self) -> np.ndarray:
        """Regret as a fraction of the bound."""
        return self.regret / self.bound

    @property
    def violations(self) -> np.ndarray:
        """Horizons at which the regret exceeds the bound."""
        return self.horizons[self.regret > self.bound]

    @property
    def is_consistent(self) -> bool:
        """True when the bound holds at every horizon."""
        return bool(self.violations.size == 0)


class SubsequenceProfile(BaseModel):
    """Return statistics of the best constant portfolio on one cyclic subsequence."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(description="Cycle length", ge=1)
    position: int = Field(description="0-based position in the cycle", ge=0)
    size: int = Field(description="Rows in the subsequence", ge=0)
    average_return: float = Field(
        description="Mean gross return of the best portfolio, NaN when empty",
    )
    variance: float = Field(
        description="Population variance of those gross returns, NaN when empty",
    )

    @field_validator("variance")
    @classmethod
    def validate_variance(cls, value: float) -> float:
        """Reject negative variances; NaN marks an empty subsequence."""
        if value < 0:
            msg = f"variance must be nonnegative, got {value}"
            raise ValueError(msg)
        return value
