"""Generalized Kelly criterion for block-wise i.i.d. markets with finite support.

Random draws use numpy's PCG64 bit generator through `np.random.default_rng`
(Generator.choice and Generator.dirichlet); simulated sequences for a given
seed are part of the test contract.
"""

import math
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import structlog

from kcport.entities.block_distribution import BlockDistribution, KLogOptimal
from kcport.entities.errors import ComputationError, InputValidationError
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.portfolio import Portfolio, StrategyTrace
from kcport.use_cases.computations.concave import maximize_expected_log
from kcport.use_cases.computations.grid_kernels import aligned_log_returns, grid_objective
from kcport.use_cases.computations.simplex import generate_grid

logger = structlog.get_logger(__name__)

DEFAULT_SEED_STEP = Fraction(1, 20)


def _check_tuple(dist: BlockDistribution, portfolios: Sequence[Portfolio]) -> np.ndarray:
    if len(portfolios) != dist.k or any(p.m != dist.m for p in portfolios):
        msg = f"expected {dist.k} portfolios of {dist.m} assets"
        raise InputValidationError(msg)
    return np.array([p.weights for p in portfolios], dtype=np.float64)


def _position_optimum(
    probabilities: np.ndarray,
    rows: np.ndarray,
    tol: float,
    seed_step: Fraction,
) -> np.ndarray:
    """Maximizer of E[log <b, X>] for one block position: grid seed, then ascent."""
    m = rows.shape[1]
    if m == 1:
        return np.ones(1)
    grid = generate_grid(m, seed_step)
    seed = grid.points[int(np.argmax(grid_objective(grid.points, rows, probabilities)))]
    best, _ = maximize_expected_log(rows, probabilities, seed, tol)
    return best


def k_log_optimal(
    dist: BlockDistribution,
    tol: float = 1e-10,
    seed_step: Fraction = DEFAULT_SEED_STEP,
) -> KLogOptimal:
    """k-log-optimal portfolios of a block distribution.

    E[sum_i log <b^i, X_i>] = sum_i E[log <b^i, X_i>] depends only on the
    position marginals, so the k portfolios are optimized independently.

    Args:
        dist: Block distribution.
        tol: Ascent tolerance.
        seed_step: Pitch of the grid used to seed each ascent.

    Returns:
        Optimal tuple and its growth rate in nats per period.
    """
    portfolios = []
    values = []
    for position in range(dist.k):
        probabilities, rows = dist.marginal(position)
        best = _position_optimum(probabilities, rows, tol, seed_step)
        portfolios.append(Portfolio.from_array(best))
        values.append(math.fsum(probabilities * np.log(rows @ best)))
    result = KLogOptimal(
        portfolios=tuple(portfolios),
        position_values=tuple(values),
        rate=math.fsum(values) / dist.k,
    )
    logger.info("k_log_optimal_solved", k=dist.k, m=dist.m, rate=result.rate)
    return result


def optimal_growth_rate(dist: BlockDistribution, portfolios: Sequence[Portfolio]) -> float:
    """(1/k) E[sum_i log <b^i, X_i>] for the given tuple, as an exact finite sum.

    Raises:
        ComputationError: If a portfolio has zero return on a support row.
    """
    cycle = _check_tuple(dist, portfolios)
    gross = np.einsum("skm,km->sk", dist.blocks, cycle)
    if np.any(gross <= 0):
        msg = "portfolio has zero return on a support row"
        raise ComputationError(msg)
    return math.fsum(dist.probabilities * np.log(gross).sum(axis=1)) / dist.k


def kt_certificate(
    dist: BlockDistribution,
    candidate: Sequence[Portfolio],
    tests: Sequence[Sequence[Portfolio]],
) -> float:
    """Largest Kuhn-Tucker expectation of the candidate over the test tuples.

    For each test tuple computes E[prod_i (<b^i, X_i> / <b^i*, X_i>)^(1/k)];
    the candidate is k-log-optimal exactly when no tuple pushes this above 1.

    Raises:
        ComputationError: If the candidate has zero return on a support row.
    """
    reference = np.einsum("skm,km->sk", dist.blocks, _check_tuple(dist, candidate))
    if np.any(reference <= 0):
        msg = "candidate has zero return on a support row"
        raise ComputationError(msg)
    if not tests:
        msg = "at least one test tuple is required"
        raise InputValidationError(msg)
    best = -math.inf
    for test in tests:
        gross = np.einsum("skm,km->sk", dist.blocks, _check_tuple(dist, test))
        with np.errstate(divide="ignore"):
            log_ratio = (np.log(gross) - np.log(reference)).sum(axis=1) / dist.k
        best = max(best, math.fsum(dist.probabilities * np.exp(log_ratio)))
    return best


def simulate_market(dist: BlockDistribution, blocks: int, seed: int) -> ReturnsSequence:
    """Draw T independent blocks and concatenate them into a (T k) x m sequence."""
    if blocks < 1:
        msg = f"block count must be >= 1, got {blocks}"
        raise InputValidationError(msg)
    rng = np.random.default_rng(seed)
    indices = rng.choice(dist.support_size, size=blocks, p=dist.probabilities)
    values = dist.blocks[indices].reshape(blocks * dist.k, dist.m)
    logger.info("market_simulated", blocks=blocks, k=dist.k, seed=seed)
    return ReturnsSequence(values=values)


def block_log_growth_samples(
    returns: ReturnsSequence,
    portfolios: Sequence[Portfolio],
) -> np.ndarray:
    """sum_i log <b^i, x_{tk+i}> for every complete block t."""
    k = len(portfolios)
    cycle = np.array([p.weights for p in portfolios], dtype=np.float64)
    complete = (returns.n // k) * k
    logs = aligned_log_returns(cycle[np.arange(complete) % k], returns.values[:complete])
    return logs.reshape(-1, k).sum(axis=1)


def convergence_table(
    trace: StrategyTrace,
    k: int,
    rate: float,
    sigma_hat: float,
) -> dict[str, np.ndarray]:
    """Growth rate at block boundaries against the optimal rate.

    The tolerance column is 4 sigma_hat / sqrt(t) for t observed blocks, with
    sigma_hat the empirical deviation of the per-block log growth.
    """
    horizons = np.arange(k, trace.n + 1, k)
    blocks = horizons // k
    growth = trace.log_wealth[horizons - 1] / horizons
    return {
        "block": blocks,
        "growth_rate": growth,
        "optimal_rate": np.full(blocks.shape, rate),
        "abs_error": np.abs(growth - rate),
        "tolerance": 4.0 * sigma_hat / np.sqrt(blocks),
    }


def random_tuples(k: int, m: int, count: int, seed: int) -> list[tuple[Portfolio, ...]]:
    """Seeded tuples of k uniformly distributed simplex points."""
    rng = np.random.default_rng(seed)
    draws = rng.dirichlet(np.ones(m), size=(count, k))
    return [
        tuple(Portfolio.from_array(point / point.sum()) for point in draw) for draw in draws
    ]


def perturb_toward_uniform(
    portfolios: Sequence[Portfolio],
    mix: float,
) -> tuple[Portfolio, ...]:
    """Convex combination (1 - mix) b + mix (1/m, ..., 1/m) of every portfolio."""
    return tuple(
        Portfolio.from_array((1.0 - mix) * p.as_array() + mix / p.m) for p in portfolios
    )
