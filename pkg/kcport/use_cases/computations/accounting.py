"""Wealth and growth accounting plus performance metrics of strategy traces."""

import math

import numpy as np
import structlog

from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.portfolio import PerformanceReport, Portfolio, StrategyTrace

logger = structlog.get_logger(__name__)


def wealth_and_growth(trace: StrategyTrace) -> tuple[float, float]:
    """Final wealth S_n and growth rate W_n = log(S_n) / n of a trace.

    Args:
        trace: Strategy trace with at least one period.

    Returns:
        Tuple of final wealth and growth rate (nats per period).

    Raises:
        InputValidationError: If the trace is empty.
    """
    if trace.n == 0:
        msg = "empty trace"
        raise InputValidationError(msg)
    final_log_wealth = float(trace.log_wealth[-1])
    try:
        final_wealth = math.exp(final_log_wealth)
    except OverflowError:
        final_wealth = math.inf
    return final_wealth, final_log_wealth / trace.n


def performance_report(trace: StrategyTrace) -> PerformanceReport:
    """Final wealth, growth rate, average return and Sharpe ratio of a trace.

    The Sharpe ratio is the mean gross return over the population standard
    deviation of gross returns; a flat return series reports +inf.

    Args:
        trace: Strategy trace with at least two periods.

    Returns:
        Performance report.

    Raises:
        InputValidationError: If fewer than two periods are available.
    """
    if trace.n < 2:
        msg = "insufficient periods"
        raise InputValidationError(msg)
    final_wealth, growth_rate = wealth_and_growth(trace)
    average_return = float(np.mean(trace.period_returns))
    deviation = float(np.std(trace.period_returns))
    if deviation == 0.0:
        logger.warning("sharpe_undefined", strategy=trace.strategy, reason="zero deviation")
        sharpe_ratio = math.inf
    else:
        sharpe_ratio = average_return / deviation
    return PerformanceReport(
        strategy=trace.strategy,
        periods=trace.n,
        log_final_wealth=float(trace.log_wealth[-1]),
        final_wealth=final_wealth,
        growth_rate=growth_rate,
        average_return=average_return,
        sharpe_ratio=sharpe_ratio,
    )


def cyclic_constant_trace(
    returns: ReturnsSequence,
    portfolios: tuple[Portfolio, ...],
    strategy: str | None = None,
) -> StrategyTrace:
    """Trace of the k-cyclic constant strategy looping over `portfolios`.

    Period t (0-based) holds portfolios[t mod k]; k = 1 is a constant
    rebalanced portfolio.
    """
    k = len(portfolios)
    if k < 1:
        msg = "at least one portfolio is required"
        raise InputValidationError(msg)
    if any(p.m != returns.m for p in portfolios):
        msg = f"portfolios must have {returns.m} weights"
        raise InputValidationError(msg)
    cycle = np.array([p.weights for p in portfolios], dtype=np.float64)
    rows = cycle[np.arange(returns.n) % k]
    return StrategyTrace.from_portfolios(strategy or f"{k}-CC", rows, returns.values)


def buy_and_hold_trace(returns: ReturnsSequence, asset: int) -> StrategyTrace:
    """Trace of holding a single asset for the whole horizon."""
    if not 0 <= asset < returns.m:
        msg = f"asset index must lie in [0, {returns.m}), got {asset}"
        raise InputValidationError(msg)
    label = f"Buy and hold on {returns.asset_names()[asset]}"
    return cyclic_constant_trace(returns, (Portfolio.vertex(returns.m, asset),), strategy=label)


def growth_rate_path(trace: StrategyTrace) -> np.ndarray:
    """W_n for every horizon n = 1..N."""
    return trace.log_wealth / np.arange(1, trace.n + 1)


def block_boundary_growth(trace: StrategyTrace, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Growth rates sampled at the block boundaries n = k, 2k, ...

    Returns:
        Tuple of block counts t = 1..T and W_{tk}.
    """
    if k < 1:
        msg = f"block length must be >= 1, got {k}"
        raise InputValidationError(msg)
    horizons = np.arange(k, trace.n + 1, k)
    return horizons // k, trace.log_wealth[horizons - 1] / horizons
