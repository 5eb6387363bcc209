"""Best constant and k-cyclic constant strategies in hindsight, regret and bounds."""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import structlog

from kcport.entities.benchmark import KccBenchmark, RegretSeries, SubsequenceProfile
from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.portfolio import Portfolio, StrategyTrace
from kcport.entities.simplex_grid import PortfolioGrid, PriorDensity
from kcport.use_cases.computations.concave import maximize_expected_log
from kcport.use_cases.computations.cyclic import decompose
from kcport.use_cases.computations.grid_kernels import (
    aligned_log_returns,
    chunk_length,
    grid_objective,
    point_log_returns,
)

logger = structlog.get_logger(__name__)

DEFAULT_REFINE_TOL = 1e-10


def _exact_log_wealth(portfolio: np.ndarray, rows: np.ndarray) -> float:
    """Correctly rounded sum of log <portfolio, row_t>."""
    if rows.shape[0] == 0:
        return 0.0
    return math.fsum(aligned_log_returns(np.broadcast_to(portfolio, rows.shape), rows))


def _best_grid_point(rows: np.ndarray, grid: PortfolioGrid) -> np.ndarray:
    """Grid point maximizing the log-wealth on `rows`, lexicographically first on ties."""
    return grid.points[int(np.argmax(grid_objective(grid.points, rows)))]


def _best_on_rows(
    rows: np.ndarray,
    grid: PortfolioGrid,
    refine: bool,
    tol: float,
) -> np.ndarray:
    if rows.shape[0] == 0:
        return np.full(grid.m, 1.0 / grid.m)
    best = _best_grid_point(rows, grid)
    if refine:
        uniform = np.full(rows.shape[0], 1.0 / rows.shape[0])
        best, _ = maximize_expected_log(rows, uniform, best, tol)
    return best


def best_crp(returns: ReturnsSequence, grid: PortfolioGrid) -> tuple[Portfolio, float]:
    """Best constant rebalanced portfolio on the grid.

    Args:
        returns: Fully observed sequence.
        grid: Candidate portfolios; weights are not used.

    Returns:
        Tuple of the maximizing grid point and its log-wealth.

    Raises:
        InputValidationError: On empty returns or mismatched asset count.
    """
    if returns.n == 0:
        msg = "empty sequence"
        raise InputValidationError(msg)
    if grid.m != returns.m:
        msg = f"grid has {grid.m} assets but returns have {returns.m}"
        raise InputValidationError(msg)
    best = _best_grid_point(returns.values, grid)
    return Portfolio.from_array(best), _exact_log_wealth(best, returns.values)


def refine_crp(
    returns: ReturnsSequence,
    initial: Portfolio,
    tol: float = DEFAULT_REFINE_TOL,
) -> Portfolio:
    """Move a constant portfolio uphill to the continuum optimum.

    The mean log return is concave in the portfolio, so projected gradient
    ascent from any start reaches the global maximum within `tol`.
    """
    if initial.m != returns.m:
        msg = f"initial portfolio has {initial.m} weights, returns have {returns.m} assets"
        raise InputValidationError(msg)
    probabilities = np.full(returns.n, 1.0 / returns.n)
    refined, _ = maximize_expected_log(returns.values, probabilities, initial.as_array(), tol)
    return Portfolio.from_array(refined)


def best_kcc(
    returns: ReturnsSequence,
    k: int,
    grid: PortfolioGrid,
    refine: bool = False,
    tol: float = DEFAULT_REFINE_TOL,
    max_workers: int = 1,
) -> KccBenchmark:
    """Best k-cyclic constant strategy, solved independently per subsequence.

    The wealth of a k-cyclic constant strategy factorizes into the wealths of
    its k constant portfolios on their own subsequences, so each position is
    optimized alone. Empty subsequences contribute the uniform portfolio and
    log-wealth 0.

    Args:
        returns: Fully observed sequence.
        k: Cycle length, at least 1.
        grid: Candidate portfolios.
        refine: Refine every grid optimum off the grid.
        tol: Refinement tolerance.
        max_workers: Threads used across subsequences.

    Returns:
        Benchmark whose log_wealth is the correctly rounded total over all rows.
    """
    if grid.m != returns.m:
        msg = f"grid has {grid.m} assets but returns have {returns.m}"
        raise InputValidationError(msg)
    decomposition = decompose(returns, k)
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        optima = list(
            executor.map(
                lambda sub: _best_on_rows(sub.rows, grid, refine, tol),
                decomposition.subsequences,
            )
        )
    cycle = np.array(optima)
    per_position = tuple(
        _exact_log_wealth(best, sub.rows)
        for best, sub in zip(optima, decomposition.subsequences, strict=True)
    )
    total = math.fsum(aligned_log_returns(cycle[np.arange(returns.n) % k], returns.values))
    return KccBenchmark(
        k=k,
        portfolios=tuple(Portfolio.from_array(best) for best in optima),
        subsequence_log_wealth=per_position,
        log_wealth=total,
        refined=refine,
    )


def regret_bound(k: int, m: int, n: int, density: PriorDensity) -> float:
    """Worst-case log-wealth regret of the k-parallel mixture against the best k-CC.

    uniform: k (m - 1) log(n + 1); dirichlet_half: (k/2)(m - 1) log(n + 1) + k log 2.
    """
    if min(k, m, n) < 1:
        msg = f"k, m and n must be >= 1, got {(k, m, n)}"
        raise InputValidationError(msg)
    if density is PriorDensity.UNIFORM:
        return k * (m - 1) * math.log(n + 1)
    return 0.5 * k * (m - 1) * math.log(n + 1) + k * math.log(2)


def running_best_kcc(returns: ReturnsSequence, k: int, grid: PortfolioGrid) -> np.ndarray:
    """Best grid k-CC log-wealth for every horizon n = 1..N.

    Each horizon's benchmark is chosen in hindsight at that horizon. Per
    subsequence, the cumulative log-wealth of every grid point is carried
    forward row by row and its maximum recorded.
    """
    if grid.m != returns.m:
        msg = f"grid has {grid.m} assets but returns have {returns.m}"
        raise InputValidationError(msg)
    decomposition = decompose(returns, k)
    totals = np.zeros(returns.n)
    periods = np.arange(returns.n)
    step = chunk_length(grid.points)
    for sub in decomposition.subsequences:
        if sub.size == 0:
            continue
        maxima = np.empty(sub.size)
        carry = np.zeros((1, grid.size))
        for start in range(0, sub.size, step):
            logs = point_log_returns(grid.points, sub.rows[start : start + step])
            cumulative = np.cumsum(np.vstack([carry, logs]), axis=0)[1:]
            maxima[start : start + logs.shape[0]] = cumulative.max(axis=1)
            carry = cumulative[-1:]
        seen = np.where(periods >= sub.position, (periods - sub.position) // k + 1, 0)
        totals += np.where(seen > 0, maxima[np.maximum(seen, 1) - 1], 0.0)
    return totals


def check_consistency(
    trace: StrategyTrace,
    benchmark_log_wealth: np.ndarray,
    k: int,
    density: PriorDensity,
) -> RegretSeries:
    """Regret in growth rate against a benchmark series, with the bound per horizon.

    Args:
        trace: Strategy trace.
        benchmark_log_wealth: Benchmark log-wealth at every horizon of the trace.
        k: Cycle length of the benchmark.
        density: Prior density the strategy used.

    Returns:
        Regret series; violations are logged.

    Raises:
        InputValidationError: If the series lengths differ.
    """
    benchmark = np.asarray(benchmark_log_wealth, dtype=np.float64)
    if benchmark.shape != (trace.n,):
        msg = f"benchmark has {benchmark.shape[0]} horizons, trace has {trace.n}"
        raise InputValidationError(msg)
    horizons = np.arange(1, trace.n + 1)
    bounds = np.array([regret_bound(k, trace.m, int(n), density) for n in horizons]) / horizons
    series = RegretSeries(
        k=k,
        horizons=horizons,
        regret=(benchmark - trace.log_wealth) / horizons,
        bound=bounds,
    )
    if not series.is_consistent:
        logger.warning(
            "regret_bound_violated",
            k=k,
            strategy=trace.strategy,
            first_horizon=int(series.violations[0]),
            count=int(series.violations.size),
        )
    return series


def subsequence_profile(
    returns: ReturnsSequence,
    benchmark: KccBenchmark,
) -> tuple[SubsequenceProfile, ...]:
    """Average and variance of the benchmark's gross returns on each subsequence."""
    decomposition = decompose(returns, benchmark.k)
    profiles = []
    for portfolio, sub in zip(benchmark.portfolios, decomposition.subsequences, strict=True):
        gross = sub.rows @ portfolio.as_array()
        profiles.append(
            SubsequenceProfile(
                k=benchmark.k,
                position=sub.position,
                size=sub.size,
                average_return=float(gross.mean()) if sub.size else math.nan,
                variance=float(gross.var()) if sub.size else math.nan,
            )
        )
    return tuple(profiles)


def growth_rate_difference(trace: StrategyTrace, reference: StrategyTrace) -> np.ndarray:
    """W_n(trace) - W_n(reference) for every horizon."""
    if trace.n != reference.n:
        msg = f"traces differ in length: {trace.n} vs {reference.n}"
        raise InputValidationError(msg)
    return (trace.log_wealth - reference.log_wealth) / np.arange(1, trace.n + 1)
