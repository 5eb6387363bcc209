"""Discretized simplex entities used as the prior of the mixture strategies."""

import math
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kcport.entities.portfolio import Portfolio, frozen_array

WEIGHT_SUM_TOLERANCE = 1e-12


class PriorDensity(str, Enum):
    """Prior densities over the simplex."""

    UNIFORM = "uniform"
    DIRICHLET_HALF = "dirichlet_half"


def default_grid_step(m: int) -> Fraction:
    """Default pitch: 0.025 for four assets, 0.01 otherwise."""
    return Fraction(1, 40) if m == 4 else Fraction(1, 100)


class PortfolioGrid(BaseModel):
    """Lattice points of the simplex at pitch `step`, with optional prior weights."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: int = Field(description="Asset count", examples=[4], ge=2)
    step: Fraction = Field(
        description="Grid pitch; 1/step is an integer",
        examples=["1/40"],
    )
    counts: np.ndarray = Field(description="Integer lattice coordinates, each row sums to 1/step")
    points: np.ndarray = Field(description="Portfolio coordinates counts * step")
    weights: np.ndarray | None = Field(default=None, description="Prior weight per point")
    density: PriorDensity | None = Field(default=None, description="Density the weights came from")

    @field_validator("points", mode="before")
    @classmethod
    def convert_points(cls, value: Any) -> np.ndarray:
        """Coerce points into a read-only matrix."""
        return frozen_array(value, ndim=2, name="points")

    @field_validator("counts", mode="before")
    @classmethod
    def convert_counts(cls, value: Any) -> np.ndarray:
        """Coerce lattice counts into a read-only integer matrix."""
        array = np.array(value, dtype=np.int64)
        array.setflags(write=False)
        return array

    @field_validator("weights", mode="before")
    @classmethod
    def convert_weights(cls, value: Any) -> np.ndarray | None:
        """Coerce weights into a read-only vector."""
        if value is None:
            return None
        return frozen_array(value, ndim=1, name="weights")

    @model_validator(mode="after")
    def validate_grid(self) -> "PortfolioGrid":
        """Check lattice size, coordinates and prior weights."""
        resolution = 1 / self.step
        if resolution.denominator != 1:
            msg = f"step must divide 1, got {self.step}"
            raise ValueError(msg)
        expected = math.comb(int(resolution) + self.m - 1, self.m - 1)
        if self.points.shape != (expected, self.m) or self.counts.shape != (expected, self.m):
            msg = f"grid must hold {expected} points of dimension {self.m}"
            raise ValueError(msg)
        if np.any(self.counts.sum(axis=1) != int(resolution)):
            msg = "every lattice point must sum to 1"
            raise ValueError(msg)
        if self.weights is not None:
            if self.weights.shape != (expected,) or not np.all(self.weights > 0):
                msg = "grid weights must be positive, one per point"
                raise ValueError(msg)
            if abs(math.fsum(self.weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
                msg = "grid weights must sum to 1"
                raise ValueError(msg)
        return self

    @property
    def size(self) -> int:
        """Number of grid points."""
        return int(self.points.shape[0])

    @property
    def resolution(self) -> int:
        """Number of pitches per unit, 1/step."""
        return int(1 / self.step)

    def portfolio(self, index: int) -> Portfolio:
        """Grid point as a Portfolio entity."""
        return Portfolio.from_array(self.points[index])

    def require_weights(self) -> np.ndarray:
        """Prior weights, failing when the grid has not been weighted yet."""
        if self.weights is None:
            msg = "grid weights are not populated; call grid_weights first"
            raise ValueError(msg)
        return self.weights
