"""Portfolio, strategy trace and performance entities."""

import math
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

WEIGHT_SUM_TOLERANCE = 1e-12
LOG_WEALTH_STEP_TOLERANCE = 1e-12
GROWTH_RATE_TOLERANCE = 1e-10

SHARPE_DEFINITION = (
    "sharpe_ratio = mean gross period return / population std of gross period returns "
    "(no risk-free subtraction, no annualization)"
)


def frozen_array(value: Any, *, ndim: int, name: str) -> np.ndarray:
    """Convert a value into a read-only float64 array of the given rank.

    Args:
        value: Array-like input.
        ndim: Required number of dimensions.
        name: Field name used in error messages.

    Returns:
        Read-only array.
    """
    array = np.array(value, dtype=np.float64)
    if array.ndim != ndim:
        msg = f"{name} must be {ndim}-dimensional, got shape {array.shape}"
        raise ValueError(msg)
    array.setflags(write=False)
    return array


class Portfolio(BaseModel):
    """Point of the no-short simplex: fractions of capital per asset."""

    model_config = ConfigDict(frozen=True)

    weights: tuple[float, ...] = Field(
        description="Fraction of capital held in each asset",
        examples=[(0.5, 0.25, 0.25)],
        min_length=1,
    )

    @field_validator("weights")
    @classmethod
    def validate_simplex(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        """Ensure weights are nonnegative and sum to one."""
        if any(not math.isfinite(w) or w < 0 for w in value):
            msg = f"Portfolio weights must be finite and nonnegative, got {value}"
            raise ValueError(msg)
        total = math.fsum(value)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            msg = f"Portfolio weights must sum to 1, got {total!r}"
            raise ValueError(msg)
        return value

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Portfolio":
        """Build a portfolio from a numpy vector."""
        return cls(weights=tuple(float(w) for w in array))

    @classmethod
    def uniform(cls, m: int) -> "Portfolio":
        """Equal-weight portfolio (1/m, ..., 1/m)."""
        return cls(weights=(1.0 / m,) * m)

    @classmethod
    def vertex(cls, m: int, asset: int) -> "Portfolio":
        """Portfolio fully invested in one asset."""
        return cls(weights=tuple(1.0 if j == asset else 0.0 for j in range(m)))

    @property
    def m(self) -> int:
        """Asset count."""
        return len(self.weights)

    def as_array(self) -> np.ndarray:
        """Weights as a float64 vector."""
        return np.array(self.weights, dtype=np.float64)


class StrategyTrace(BaseModel):
    """Time-indexed portfolios with their period returns and log-wealth path."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    strategy: str = Field(
        description="Strategy label",
        examples=["2-PUP", "Best 2-CC"],
        min_length=1,
    )
    portfolios: np.ndarray = Field(description="n x m portfolio weights, one row per period")
    period_returns: np.ndarray = Field(description="Gross portfolio return per period")
    log_wealth: np.ndarray = Field(description="Cumulative log wealth in nats")

    @field_validator("portfolios", mode="before")
    @classmethod
    def convert_portfolios(cls, value: Any) -> np.ndarray:
        """Coerce portfolios into a read-only matrix."""
        return frozen_array(value, ndim=2, name="portfolios")

    @field_validator("period_returns", "log_wealth", mode="before")
    @classmethod
    def convert_vectors(cls, value: Any) -> np.ndarray:
        """Coerce per-period series into read-only vectors."""
        return frozen_array(value, ndim=1, name="series")

    @model_validator(mode="after")
    def validate_accounting(self) -> "StrategyTrace":
        """Check shapes, positivity and the log-wealth recursion."""
        n = self.portfolios.shape[0]
        if self.period_returns.shape != (n,) or self.log_wealth.shape != (n,):
            msg = "portfolios, period_returns and log_wealth must have the same length"
            raise ValueError(msg)
        if n and not np.all(self.period_returns > 0):
            msg = "period returns must be strictly positive"
            raise ValueError(msg)
        if n:
            steps = np.diff(self.log_wealth, prepend=0.0)
            # one ulp of the running total is added on top of the absolute tolerance
            allowed = LOG_WEALTH_STEP_TOLERANCE + 4 * np.finfo(np.float64).eps * np.abs(
                self.log_wealth
            )
            if np.any(np.abs(steps - np.log(self.period_returns)) > allowed):
                msg = "log_wealth is not the cumulative sum of log period returns"
                raise ValueError(msg)
        return self

    @classmethod
    def from_portfolios(
        cls,
        strategy: str,
        portfolios: np.ndarray,
        returns: np.ndarray,
    ) -> "StrategyTrace":
        """Build a trace by evaluating portfolios against a return matrix.

        Args:
            strategy: Strategy label.
            portfolios: n x m portfolio rows.
            returns: n x m gross returns the portfolios were applied to.

        Returns:
            Validated trace.
        """
        period_returns = np.einsum("ij,ij->i", portfolios, returns)
        return cls(
            strategy=strategy,
            portfolios=portfolios,
            period_returns=period_returns,
            log_wealth=np.cumsum(np.log(period_returns)),
        )

    @property
    def n(self) -> int:
        """Number of periods."""
        return int(self.portfolios.shape[0])

    @property
    def m(self) -> int:
        """Asset count."""
        return int(self.portfolios.shape[1])


class PerformanceReport(BaseModel):
    """Summary metrics of one strategy (final wealth, growth, average return, Sharpe)."""

    model_config = ConfigDict(frozen=True)

    strategy: str = Field(description="Strategy label", examples=["2-PUP"], min_length=1)
    periods: int = Field(description="Number of periods n", examples=[6798], ge=1)
    log_final_wealth: float = Field(description="log S_n in nats", examples=[3.806])
    final_wealth: float = Field(description="S_n, may overflow to inf", examples=[44.98], gt=0)
    growth_rate: float = Field(description="W_n in nats per period", examples=[0.00056])
    average_return: float = Field(description="Mean gross period return", examples=[1.0007], gt=0)
    sharpe_ratio: float = Field(description="Mean over population std of gross returns")

    @model_validator(mode="after")
    def validate_growth_rate(self) -> "PerformanceReport":
        """Ensure growth rate equals log(final wealth) / n."""
        if abs(self.growth_rate - self.log_final_wealth / self.periods) > GROWTH_RATE_TOLERANCE:
            msg = "growth_rate must equal log(final_wealth) / n"
            raise ValueError(msg)
        return self

    def to_row(self) -> dict[str, Any]:
        """Row with the report CSV schema."""
        return {
            "strategy": self.strategy,
            "final_wealth": self.final_wealth,
            "growth_rate": self.growth_rate,
            "average_return": self.average_return,
            "sharpe_ratio": self.sharpe_ratio,
        }
