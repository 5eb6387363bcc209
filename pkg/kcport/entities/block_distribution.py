"""Finite-support block distributions and their k-log-optimal portfolios."""

import math
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kcport.entities.portfolio import Portfolio, frozen_array

PROBABILITY_SUM_TOLERANCE = 1e-12
RATE_TOLERANCE = 1e-10


class BlockDistribution(BaseModel):
    """Joint law of one k x m block of gross returns with finite support."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(description="Block length", examples=[2], ge=1)
    m: int = Field(description="Asset count", examples=[2], ge=1)
    probabilities: np.ndarray = Field(description="Probability of each support block")
    blocks: np.ndarray = Field(description="S x k x m strictly positive support blocks")

    @field_validator("probabilities", mode="before")
    @classmethod
    def convert_probabilities(cls, value: Any) -> np.ndarray:
        """Coerce probabilities into a read-only vector."""
        return frozen_array(value, ndim=1, name="probabilities")

    @field_validator("blocks", mode="before")
    @classmethod
    def convert_blocks(cls, value: Any) -> np.ndarray:
        """Coerce support blocks into a read-only 3-tensor."""
        return frozen_array(value, ndim=3, name="blocks")

    @model_validator(mode="after")
    def validate_support(self) -> "BlockDistribution":
        """Check shapes, probabilities, positivity and uniqueness of the support."""
        support = self.probabilities.shape[0]
        if support == 0:
            msg = "support must not be empty"
            raise ValueError(msg)
        if self.blocks.shape != (support, self.k, self.m):
            msg = f"blocks must have shape {(support, self.k, self.m)}, got {self.blocks.shape}"
            raise ValueError(msg)
        if np.any(self.probabilities <= 0) or np.any(self.probabilities > 1):
            msg = "probabilities must lie in (0, 1]"
            raise ValueError(msg)
        total = math.fsum(self.probabilities)
        if abs(total - 1.0) > PROBABILITY_SUM_TOLERANCE:
            msg = f"probabilities sum to {total:.12g}"
            raise ValueError(msg)
        if not np.all(np.isfinite(self.blocks)) or np.any(self.blocks <= 0):
            msg = "support blocks must be finite and strictly positive"
            raise ValueError(msg)
        if np.unique(self.blocks.reshape(support, -1), axis=0).shape[0] != support:
            msg = "support blocks must be distinct"
            raise ValueError(msg)
        return self

    @property
    def support_size(self) -> int:
        """Number of support blocks."""
        return int(self.probabilities.shape[0])

    def marginal(self, position: int) -> tuple[np.ndarray, np.ndarray]:
        """Probabilities and return rows of one block position."""
        if not 0 <= position < self.k:
            msg = f"position must lie in [0, {self.k}), got {position}"
            raise ValueError(msg)
        return self.probabilities, self.blocks[:, position, :]


class KLogOptimal(BaseModel):
    """Tuple of k-log-optimal portfolios and the growth rate it attains."""

    model_config = ConfigDict(frozen=True)

    portfolios: tuple[Portfolio, ...] = Field(description="(b^1*, ..., b^k*)", min_length=1)
    position_values: tuple[float, ...] = Field(
        description="E[log <b^i*, X_i>] for each block position",
    )
    rate: float = Field(description="(1/k) E[sum_i log <b^i*, X_i>] in nats per period")

    @model_validator(mode="after")
    def validate_rate(self) -> "KLogOptimal":
        """Check the rate against the per-position values."""
        k = len(self.portfolios)
        if len(self.position_values) != k:
            msg = f"expected {k} position values, got {len(self.position_values)}"
            raise ValueError(msg)
        if abs(self.rate - math.fsum(self.position_values) / k) > RATE_TOLERANCE:
            msg = "rate must equal the mean of the position values"
            raise ValueError(msg)
        return self

    @property
    def k(self) -> int:
        """Block length."""
        return len(self.portfolios)

    def portfolio_matrix(self) -> np.ndarray:
        """k x m matrix of the optimal portfolios."""
        return np.array([p.weights for p in self.portfolios], dtype=np.float64)
