"""Shared test data: seeded random return corpora and small price files."""

from pathlib import Path

import numpy as np
import pandas as pd

from kcport.entities.market_data import ReturnsSequence


def random_returns(seed: int, n: int = 200, m: int = 3) -> ReturnsSequence:
    """Returns drawn uniformly from [0.5, 2] with a fixed seed."""
    rng = np.random.default_rng(seed)
    return ReturnsSequence(values=rng.uniform(0.5, 2.0, size=(n, m)))


def alternating_returns(cycles: int) -> ReturnsSequence:
    """(1, 2), (1, 0.5) repeated `cycles` times."""
    return ReturnsSequence(values=np.tile([[1.0, 2.0], [1.0, 0.5]], (cycles, 1)))


def write_prices(path: Path, rows: list[str], header: str = "date,AAA,BBB") -> Path:
    """Write a price CSV with the given data lines."""
    path.write_text("\n".join([header, *rows]) + "\n", encoding="utf-8")
    return path


def write_random_prices(path: Path, seed: int, n: int = 40, m: int = 2) -> Path:
    """Price file with n + 1 daily rows whose returns are uniform in [0.5, 2]."""
    rng = np.random.default_rng(seed)
    growth = np.cumprod(rng.uniform(0.5, 2.0, (n, m)), axis=0)
    prices = 100.0 * np.vstack([np.ones(m), growth])
    dates = pd.date_range("2020-01-01", periods=n + 1, freq="D").strftime("%Y-%m-%d")
    lines = [
        f"{date}," + ",".join(repr(float(price)) for price in row)
        for date, row in zip(dates, prices, strict=True)
    ]
    return write_prices(path, lines, header="date," + ",".join(f"S{j}" for j in range(m)))
