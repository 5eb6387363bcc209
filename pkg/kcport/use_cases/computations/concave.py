"""Projected gradient ascent of expected log return over the simplex."""

import math

import numpy as np
import structlog

from kcport.entities.errors import ComputationError, InputValidationError

logger = structlog.get_logger(__name__)

MIN_STEP = 1e-16
MAX_ITERATIONS = 20_000


def project_simplex(vector: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort-based)."""
    ordered = np.sort(vector)[::-1]
    cumulative = np.cumsum(ordered) - 1.0
    ranks = np.arange(1, vector.shape[0] + 1)
    support = np.count_nonzero(ordered - cumulative / ranks > 0)
    theta = cumulative[support - 1] / support
    projected = np.maximum(vector - theta, 0.0)
    return projected / projected.sum()


def expected_log(rows: np.ndarray, probabilities: np.ndarray, portfolio: np.ndarray) -> float:
    """sum_t p_t log <portfolio, row_t>."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return float(probabilities @ np.log(rows @ portfolio))


def _gradient(rows: np.ndarray, probabilities: np.ndarray, portfolio: np.ndarray) -> np.ndarray:
    return probabilities @ (rows / (rows @ portfolio)[:, np.newaxis])


def frank_wolfe_gap(rows: np.ndarray, probabilities: np.ndarray, portfolio: np.ndarray) -> float:
    """Upper bound on max f - f(portfolio) for the concave objective."""
    gradient = _gradient(rows, probabilities, portfolio)
    return float(gradient.max() - gradient @ portfolio)


def maximize_expected_log(
    rows: np.ndarray,
    probabilities: np.ndarray,
    initial: np.ndarray,
    tol: float,
) -> tuple[np.ndarray, float]:
    """Maximize sum_t p_t log <b, row_t> over the simplex starting at `initial`.

    Steps are accepted only when they increase the objective; the step length
    halves until ascent and stops at MIN_STEP. Iteration ends once the
    Frank-Wolfe gap certifies that no point improves on the current one by
    tol or more.

    Args:
        rows: Return rows, strictly positive.
        probabilities: Weight of each row.
        initial: Starting simplex point.
        tol: Objective tolerance, positive.

    Returns:
        Tuple of the final point and its objective value.

    Raises:
        InputValidationError: If tol is not positive.
        ComputationError: If the objective is not finite.
    """
    if not tol > 0:
        msg = f"tolerance must be positive, got {tol}"
        raise InputValidationError(msg)
    portfolio = np.array(initial, dtype=np.float64)
    value = expected_log(rows, probabilities, portfolio)
    if not math.isfinite(value):
        msg = "objective is not finite at the initial point"
        raise ComputationError(msg)

    step = 1.0
    iterations = 0
    for iterations in range(1, MAX_ITERATIONS + 1):
        gradient = _gradient(rows, probabilities, portfolio)
        if gradient.max() - gradient @ portfolio < tol:
            break
        while step >= MIN_STEP:
            candidate = project_simplex(portfolio + step * gradient)
            candidate_value = expected_log(rows, probabilities, candidate)
            if candidate_value > value:
                break
            step /= 2
        else:
            break
        portfolio, value = candidate, candidate_value
        step *= 2
    logger.debug("ascent_finished", iterations=iterations, objective=value)
    return portfolio, value
