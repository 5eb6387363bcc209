"""Vectorized kernels shared by the mixture learner and the hindsight scans.

Every scalar product is accumulated asset by asset in a fixed order, so the
value for a given (portfolio, return row) pair does not depend on how rows or
points are batched.
"""

import numpy as np

CHUNK_CELLS = 2_000_000


def point_returns(points: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Matrix of <point_g, row_t>, shape (rows, points)."""
    total = rows[:, 0:1] * points[:, 0]
    for j in range(1, points.shape[1]):
        total += rows[:, j : j + 1] * points[:, j]
    return total


def point_log_returns(points: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Matrix of log <point_g, row_t>, shape (rows, points)."""
    return np.log(point_returns(points, rows))


def aligned_log_returns(portfolios: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """log <portfolios[t], rows[t]> for aligned rows."""
    total = portfolios[:, 0] * rows[:, 0]
    for j in range(1, rows.shape[1]):
        total = total + portfolios[:, j] * rows[:, j]
    return np.log(total)


def chunk_length(points: np.ndarray) -> int:
    """Rows per batch keeping a (rows x points) block near CHUNK_CELLS cells."""
    return max(1, CHUNK_CELLS // max(1, points.shape[0]))


def grid_objective(
    points: np.ndarray,
    rows: np.ndarray,
    probabilities: np.ndarray | None = None,
) -> np.ndarray:
    """Sum (or probability-weighted sum) of log returns of every grid point."""
    objective = np.zeros(points.shape[0])
    step = chunk_length(points)
    for start in range(0, rows.shape[0], step):
        logs = point_log_returns(points, rows[start : start + step])
        if probabilities is None:
            objective += logs.sum(axis=0)
        else:
            objective += probabilities[start : start + step] @ logs
    return objective


def observe(points: np.ndarray, log_wealth: np.ndarray, row: np.ndarray) -> np.ndarray:
    """Per-point log-wealth after one more return row."""
    return log_wealth + point_log_returns(points, row[np.newaxis, :])[0]


def mixture(points: np.ndarray, weights: np.ndarray, log_wealth: np.ndarray) -> np.ndarray:
    """Wealth-weighted average of the grid points.

    Computed with shifted exponentials: subtracting the largest log-wealth keeps
    every term in [0, 1] whatever the horizon.
    """
    mass = weights * np.exp(log_wealth - log_wealth.max())
    return (mass[:, np.newaxis] * points).sum(axis=0) / mass.sum()
