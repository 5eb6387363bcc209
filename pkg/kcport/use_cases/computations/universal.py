"""Universal Portfolio mixture and the k-parallel Universal Portfolio strategy."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import structlog

from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import ReturnsSequence, Subsequence
from kcport.entities.portfolio import Portfolio, StrategyTrace
from kcport.entities.simplex_grid import PortfolioGrid
from kcport.entities.universal_state import UpState
from kcport.use_cases.computations.cyclic import decompose
from kcport.use_cases.computations.grid_kernels import mixture, observe

logger = structlog.get_logger(__name__)


def up_portfolio(state: UpState) -> Portfolio:
    """Wealth-weighted average of the grid points under the prior.

    Args:
        state: Learner state.

    Returns:
        Portfolio sum_g w_g S(b_g) b_g / sum_g w_g S(b_g).
    """
    grid = state.grid
    return Portfolio.from_array(
        mixture(grid.points, grid.require_weights(), state.log_wealth_per_point)
    )


def up_observe(state: UpState, x: np.ndarray) -> UpState:
    """Accumulate one return row into every grid point's log-wealth.

    Args:
        state: Learner state.
        x: Strictly positive return row of length m.

    Returns:
        New state; the input state is unchanged.

    Raises:
        InputValidationError: If x has the wrong length or a nonpositive entry.
    """
    row = np.asarray(x, dtype=np.float64)
    if row.shape != (state.grid.m,):
        msg = f"return row must have {state.grid.m} entries, got shape {row.shape}"
        raise InputValidationError(msg)
    if not np.all(np.isfinite(row)) or np.any(row <= 0):
        msg = f"return row must be strictly positive, got {row.tolist()}"
        raise InputValidationError(msg)
    return UpState(
        grid=state.grid,
        log_wealth_per_point=observe(state.grid.points, state.log_wealth_per_point, row),
        observations=state.observations + 1,
    )


def _subsequence_portfolios(subsequence: Subsequence, grid: PortfolioGrid) -> np.ndarray:
    """Portfolios an independent learner plays along one subsequence."""
    points, weights = grid.points, grid.require_weights()
    portfolios = np.empty((subsequence.size, grid.m))
    log_wealth = np.zeros(grid.size)
    for t, row in enumerate(subsequence.rows):
        # the first visit of each cycle position plays the uniform portfolio
        portfolios[t] = 1.0 / grid.m if t == 0 else mixture(points, weights, log_wealth)
        log_wealth = observe(points, log_wealth, row)
    return portfolios


def run_kpup(
    returns: ReturnsSequence,
    k: int,
    grid: PortfolioGrid,
    max_workers: int = 1,
) -> StrategyTrace:
    """Run the k-parallel Universal Portfolio strategy on a return sequence.

    Period kt + i plays the mixture of the learner fed only the earlier rows
    of subsequence i. k = 1 is the plain Universal Portfolio.

    Args:
        returns: Return sequence.
        k: Cycle length, at least 1.
        grid: Weighted grid (the prior).
        max_workers: Threads used across subsequences.

    Returns:
        Strategy trace labelled "{k}-PUP".

    Raises:
        InputValidationError: On invalid k or mismatched asset count.
    """
    if grid.m != returns.m:
        msg = f"grid has {grid.m} assets but returns have {returns.m}"
        raise InputValidationError(msg)
    grid.require_weights()
    decomposition = decompose(returns, k)
    portfolios = np.empty((returns.n, returns.m))
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        results = executor.map(
            lambda sub: _subsequence_portfolios(sub, grid), decomposition.subsequences
        )
        for subsequence, rows in zip(decomposition.subsequences, results, strict=True):
            portfolios[subsequence.indices] = rows
    trace = StrategyTrace.from_portfolios(f"{k}-PUP", portfolios, returns.values)
    logger.info(
        "kpup_finished",
        k=k,
        periods=returns.n,
        grid_points=grid.size,
        final_log_wealth=float(trace.log_wealth[-1]),
    )
    return trace


def run_up(returns: ReturnsSequence, grid: PortfolioGrid) -> StrategyTrace:
    """Plain Universal Portfolio strategy (k = 1)."""
    return run_kpup(returns, 1, grid)
