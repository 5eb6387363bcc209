"""Market data entities: prices, gross returns and cyclic subsequences."""

from typing import Any

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kcport.entities.portfolio import frozen_array


def _label_order_keys(labels: tuple[str, ...]) -> list[Any]:
    """Order keys for opaque period labels: numeric, then timestamps, then text."""
    try:
        return [float(label) for label in labels]
    except ValueError:
        pass
    try:
        return list(pd.to_datetime(list(labels), format="mixed"))
    except (ValueError, TypeError):
        return list(labels)


class PriceTable(BaseModel):
    """Wide price table: one row per date, one column per asset."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dates: tuple[str, ...] = Field(
        description="Ordered period labels",
        examples=[("2019-12-30", "2019-12-31")],
    )
    symbols: tuple[str, ...] = Field(
        description="Asset identifiers",
        examples=[("HON", "BA", "AMD", "JPM")],
        min_length=1,
    )
    prices: np.ndarray = Field(description="n x m strictly positive prices")

    @field_validator("prices", mode="before")
    @classmethod
    def convert_prices(cls, value: Any) -> np.ndarray:
        """Coerce prices into a read-only matrix."""
        return frozen_array(value, ndim=2, name="prices")

    @model_validator(mode="after")
    def validate_table(self) -> "PriceTable":
        """Check shape, positivity and strictly increasing dates."""
        if self.prices.shape != (len(self.dates), len(self.symbols)):
            msg = (
                f"prices shape {self.prices.shape} does not match "
                f"{len(self.dates)} dates x {len(self.symbols)} symbols"
            )
            raise ValueError(msg)
        if not np.all(np.isfinite(self.prices)) or not np.all(self.prices > 0):
            msg = "prices must be finite and strictly positive"
            raise ValueError(msg)
        keys = _label_order_keys(self.dates)
        for previous, current, label in zip(keys, keys[1:], self.dates[1:], strict=False):
            if not previous < current:
                msg = f"dates must be strictly increasing, violated at {label!r}"
                raise ValueError(msg)
        return self


class ReturnsSequence(BaseModel):
    """n x m table of strictly positive gross returns x_{t,j} = p_{t,j} / p_{t-1,j}."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray = Field(description="n x m gross returns")
    labels: tuple[str, ...] | None = Field(
        default=None,
        description="Optional period labels (the date closing each period)",
    )
    symbols: tuple[str, ...] | None = Field(
        default=None,
        description="Optional asset identifiers",
    )

    @field_validator("values", mode="before")
    @classmethod
    def convert_values(cls, value: Any) -> np.ndarray:
        """Coerce returns into a read-only matrix."""
        return frozen_array(value, ndim=2, name="returns")

    @model_validator(mode="after")
    def validate_returns(self) -> "ReturnsSequence":
        """Check positivity and label lengths."""
        n, m = self.values.shape
        if n < 1 or m < 1:
            msg = f"returns must have at least one period and one asset, got shape {(n, m)}"
            raise ValueError(msg)
        if not np.all(np.isfinite(self.values)) or not np.all(self.values > 0):
            bad = np.argwhere(~(np.isfinite(self.values) & (self.values > 0)))[0]
            msg = f"returns must be finite and strictly positive (period {bad[0]}, asset {bad[1]})"
            raise ValueError(msg)
        if self.labels is not None and len(self.labels) != n:
            msg = f"expected {n} period labels, got {len(self.labels)}"
            raise ValueError(msg)
        if self.symbols is not None and len(self.symbols) != m:
            msg = f"expected {m} symbols, got {len(self.symbols)}"
            raise ValueError(msg)
        return self

    @property
    def n(self) -> int:
        """Period count."""
        return int(self.values.shape[0])

    @property
    def m(self) -> int:
        """Asset count."""
        return int(self.values.shape[1])

    def asset_names(self) -> tuple[str, ...]:
        """Symbols, or positional names when none were given."""
        return self.symbols or tuple(f"asset_{j}" for j in range(self.m))

    def period_labels(self) -> tuple[str, ...]:
        """Labels, or 1-based period numbers when none were given."""
        return self.labels or tuple(str(t + 1) for t in range(self.n))


class Subsequence(BaseModel):
    """Rows of a return sequence sharing one position in a cycle of length k."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    position: int = Field(description="0-based position in the cycle", ge=0)
    indices: np.ndarray = Field(description="0-based original period indices, ascending")
    rows: np.ndarray = Field(description="Return rows at those indices, may be empty")

    @field_validator("indices", mode="before")
    @classmethod
    def convert_indices(cls, value: Any) -> np.ndarray:
        """Coerce indices into a read-only integer vector."""
        array = np.array(value, dtype=np.int64).reshape(-1)
        array.setflags(write=False)
        return array

    @field_validator("rows", mode="before")
    @classmethod
    def convert_rows(cls, value: Any) -> np.ndarray:
        """Coerce rows into a read-only matrix."""
        return frozen_array(value, ndim=2, name="rows")

    @property
    def size(self) -> int:
        """Number of rows."""
        return int(self.indices.shape[0])


class CyclicDecomposition(BaseModel):
    """Round-robin split of a return sequence into k subsequences by index mod k."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(description="Cycle length", examples=[2], ge=1)
    n: int = Field(description="Length of the decomposed sequence", ge=0)
    m: int = Field(description="Asset count", ge=1)
    subsequences: tuple[Subsequence, ...] = Field(description="k subsequences in cycle order")

    @model_validator(mode="after")
    def validate_partition(self) -> "CyclicDecomposition":
        """Check that the subsequences partition 0..n-1 by residue."""
        if len(self.subsequences) != self.k:
            msg = f"expected {self.k} subsequences, got {len(self.subsequences)}"
            raise ValueError(msg)
        sizes = [sub.size for sub in self.subsequences]
        if sum(sizes) != self.n or (sizes and max(sizes) - min(sizes) > 1):
            msg = f"subsequence sizes {sizes} do not partition {self.n} periods"
            raise ValueError(msg)
        for position, sub in enumerate(self.subsequences):
            if sub.position != position or np.any(sub.indices % self.k != position):
                msg = f"subsequence {position} holds indices of another residue class"
                raise ValueError(msg)
        return self

    def interleave(self) -> np.ndarray:
        """Reassemble the original return matrix."""
        values = np.empty((self.n, self.m), dtype=np.float64)
        for sub in self.subsequences:
            values[sub.indices] = sub.rows
        return values
