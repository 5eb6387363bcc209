"""Validated configuration of one command-line invocation."""

from enum import Enum
from fractions import Fraction
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kcport.entities.simplex_grid import PriorDensity


class Subcommand(str, Enum):
    """Available command-line subcommands."""

    BACKTEST = "backtest"
    HINDSIGHT = "hindsight"
    SIMULATE = "simulate"
    BOUNDS = "bounds"
    REPORT = "report"


class RunConfig(BaseModel):
    """Everything a workflow needs to know about the requested run."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    subcommand: Subcommand = Field(description="Requested subcommand")
    input_path: Path | None = Field(default=None, description="Price CSV for backtest/hindsight")
    report_inputs: tuple[Path, ...] = Field(default=(), description="report.csv files to merge")
    output_dir: Path | None = Field(default=None, description="Directory receiving artifacts")
    k_values: tuple[int, ...] | None = Field(
        default=None,
        description="Cycle lengths; None selects the subcommand default",
        min_length=1,
    )
    grid_step: Fraction | None = Field(default=None, description="Grid pitch, default by m")
    density: PriorDensity = Field(default=PriorDensity.UNIFORM, description="Prior density")
    refine: bool = Field(default=False, description="Refine hindsight optima off the grid")
    seed: int = Field(default=0, description="Simulation seed", ge=0)
    blocks: int = Field(default=1000, description="Simulated block count T", ge=1)
    distribution_path: Path | None = Field(default=None, description="Block distribution spec")
    svg: bool = Field(default=False, description="Also write SVG charts")
    dump_grid: bool = Field(default=False, description="Also write the weighted grid as grid.csv")
    m: int | None = Field(default=None, description="Asset count for bounds", ge=1)
    n: int | None = Field(default=None, description="Horizon for bounds", ge=1)

    @field_validator("k_values")
    @classmethod
    def validate_k_values(cls, value: tuple[int, ...] | None) -> tuple[int, ...] | None:
        """Cycle lengths must be positive and distinct."""
        if value is None:
            return value
        if any(k < 1 for k in value):
            msg = f"cycle lengths must be >= 1, got {value}"
            raise ValueError(msg)
        if len(set(value)) != len(value):
            msg = f"cycle lengths must be distinct, got {value}"
            raise ValueError(msg)
        return value

    @field_validator("grid_step")
    @classmethod
    def validate_grid_step(cls, value: Fraction | None) -> Fraction | None:
        """Grid pitch must have an integer reciprocal."""
        if value is not None and (value <= 0 or value > 1 or (1 / value).denominator != 1):
            msg = "step must divide 1"
            raise ValueError(msg)
        return value

    @model_validator(mode="after")
    def validate_required_paths(self) -> "RunConfig":
        """Each subcommand declares the inputs it cannot run without."""
        required: dict[Subcommand, tuple[str, ...]] = {
            Subcommand.BACKTEST: ("input_path", "output_dir"),
            Subcommand.HINDSIGHT: ("input_path", "output_dir"),
            Subcommand.SIMULATE: ("distribution_path", "output_dir"),
            Subcommand.BOUNDS: ("m", "n"),
            Subcommand.REPORT: ("output_dir",),
        }
        missing = [name for name in required[self.subcommand] if getattr(self, name) is None]
        if missing:
            msg = f"{self.subcommand.value} requires {', '.join(missing)}"
            raise ValueError(msg)
        if self.subcommand is Subcommand.REPORT and not self.report_inputs:
            msg = "report requires at least one input report"
            raise ValueError(msg)
        return self

    def cycle_lengths(self, default: int = 1) -> tuple[int, ...]:
        """Requested cycle lengths, or `(default,)` when none were given."""
        return self.k_values or (default,)
