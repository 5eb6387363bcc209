"""Conversion of computation results into the tables written by the workflows."""

from collections.abc import Iterable, Mapping

import numpy as np
import pandas as pd

from kcport.entities.benchmark import KccBenchmark, RegretSeries, SubsequenceProfile
from kcport.entities.block_distribution import KLogOptimal
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.portfolio import PerformanceReport, StrategyTrace
from kcport.entities.simplex_grid import PortfolioGrid

REPORT_COLUMNS = ("strategy", "final_wealth", "growth_rate", "average_return", "sharpe_ratio")


def report_frame(reports: Iterable[PerformanceReport]) -> pd.DataFrame:
    """One row per strategy with the report columns."""
    return pd.DataFrame([report.to_row() for report in reports], columns=list(REPORT_COLUMNS))


def trace_frame(trace: StrategyTrace, returns: ReturnsSequence) -> pd.DataFrame:
    """period, one weight column per asset, period_return, log_wealth."""
    frame = pd.DataFrame({"period": list(returns.period_labels())})
    for j, symbol in enumerate(returns.asset_names()):
        frame[symbol] = trace.portfolios[:, j]
    frame["period_return"] = trace.period_returns
    frame["log_wealth"] = trace.log_wealth
    return frame


def regret_frame(series: RegretSeries) -> pd.DataFrame:
    """n, regret, bound and regret/bound for every horizon."""
    return pd.DataFrame(
        {
            "n": series.horizons,
            "regret": series.regret,
            "bound": series.bound,
            "ratio": series.ratio,
        }
    )


def benchmark_frame(benchmark: KccBenchmark, symbols: tuple[str, ...]) -> pd.DataFrame:
    """Best k-CC portfolio and its log-wealth on each subsequence."""
    frame = pd.DataFrame({"position": np.arange(benchmark.k)})
    matrix = benchmark.portfolio_matrix()
    for j, symbol in enumerate(symbols):
        frame[symbol] = matrix[:, j]
    frame["log_wealth"] = benchmark.subsequence_log_wealth
    return frame


def subsequence_frame(profiles: Iterable[SubsequenceProfile]) -> pd.DataFrame:
    """Size, average and variance of gross returns per subsequence."""
    return pd.DataFrame(
        [
            {
                "position": profile.position,
                "size": profile.size,
                "average_return": profile.average_return,
                "variance": profile.variance,
            }
            for profile in profiles
        ],
        columns=["position", "size", "average_return", "variance"],
    )


def returns_frame(returns: ReturnsSequence) -> pd.DataFrame:
    """Returns in the wide `date,SYM1,...` layout of the price files."""
    frame = pd.DataFrame({"date": list(returns.period_labels())})
    for j, symbol in enumerate(returns.asset_names()):
        frame[symbol] = returns.values[:, j]
    return frame


def convergence_frame(strategy: str, columns: Mapping[str, np.ndarray]) -> pd.DataFrame:
    """Block-boundary growth table of one strategy."""
    frame = pd.DataFrame({"strategy": strategy, **columns})
    return frame[["strategy", *columns]]


def kelly_frame(
    optimum: KLogOptimal,
    symbols: tuple[str, ...],
    certificate: float,
) -> pd.DataFrame:
    """k-log-optimal portfolios with per-position values, rate and certificate."""
    frame = pd.DataFrame({"position": np.arange(optimum.k)})
    matrix = optimum.portfolio_matrix()
    for j, symbol in enumerate(symbols):
        frame[symbol] = matrix[:, j]
    frame["expected_log_return"] = optimum.position_values
    frame["rate"] = optimum.rate
    frame["kt_max_expectation"] = certificate
    return frame


def grid_frame(grid: PortfolioGrid, symbols: tuple[str, ...]) -> pd.DataFrame:
    """Grid points, one per row, with the prior weight in the last column."""
    frame = pd.DataFrame(grid.points, columns=list(symbols))
    frame["weight"] = grid.require_weights()
    return frame
