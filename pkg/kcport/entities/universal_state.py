"""State of a Universal Portfolio learner over a weighted simplex grid."""

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kcport.entities.portfolio import frozen_array
from kcport.entities.simplex_grid import PortfolioGrid


class UpState(BaseModel):
    """Prior grid plus the running log-wealth of every grid point."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: PortfolioGrid = Field(description="Weighted grid acting as the prior")
    log_wealth_per_point: np.ndarray = Field(
        description="log S_t(b) of each grid point on the observed subsequence",
    )
    observations: int = Field(default=0, description="Number of observed return rows", ge=0)

    @field_validator("log_wealth_per_point", mode="before")
    @classmethod
    def convert_log_wealth(cls, value: Any) -> np.ndarray:
        """Coerce log-wealths into a read-only vector."""
        return frozen_array(value, ndim=1, name="log_wealth_per_point")

    @model_validator(mode="after")
    def validate_state(self) -> "UpState":
        """Check one finite entry per weighted grid point."""
        self.grid.require_weights()
        if self.log_wealth_per_point.shape != (self.grid.size,):
            msg = (
                f"expected {self.grid.size} log-wealth entries, "
                f"got {self.log_wealth_per_point.shape[0]}"
            )
            raise ValueError(msg)
        if not np.all(np.isfinite(self.log_wealth_per_point)):
            msg = "log-wealth entries must be finite"
            raise ValueError(msg)
        return self

    @classmethod
    def initial(cls, grid: PortfolioGrid) -> "UpState":
        """Empty-history state: every grid point has wealth 1."""
        return cls(grid=grid, log_wealth_per_point=np.zeros(grid.size))
