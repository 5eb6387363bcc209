"""Simplex lattice generation and prior weights."""

import math
from collections.abc import Iterator
from fractions import Fraction

import numpy as np

from kcport.entities.errors import InputValidationError
from kcport.entities.simplex_grid import PortfolioGrid, PriorDensity


def parse_step(step: float | str | Fraction) -> Fraction:
    """Read a grid pitch as an exact rational.

    Floats are read through their shortest decimal representation, so 0.025
    becomes exactly 1/40.

    Raises:
        InputValidationError: If 1/step is not a positive integer.
    """
    try:
        value = step if isinstance(step, Fraction) else Fraction(str(step))
    except (ValueError, ZeroDivisionError) as e:
        msg = f"invalid grid step {step!r}"
        raise InputValidationError(msg) from e
    if value <= 0 or value > 1 or (1 / value).denominator != 1:
        msg = "step must divide 1"
        raise InputValidationError(msg)
    return value


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of `total` into `parts` nonnegative integers, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head, *tail)


def composition_count(m: int, resolution: int) -> int:
    """Number of lattice points C(resolution + m - 1, m - 1)."""
    return math.comb(resolution + m - 1, m - 1)


def generate_grid(m: int, step: float | str | Fraction) -> PortfolioGrid:
    """Lattice points of the m-asset simplex at the given pitch.

    Args:
        m: Asset count, at least 2.
        step: Grid pitch with integer reciprocal.

    Returns:
        Unweighted grid, points sorted lexicographically.

    Raises:
        InputValidationError: On invalid m or step.
    """
    if m < 2:
        msg = f"asset count must be >= 2, got {m}"
        raise InputValidationError(msg)
    pitch = parse_step(step)
    resolution = int(1 / pitch)
    counts = np.array(list(_compositions(resolution, m)), dtype=np.int64)
    # integer division is correctly rounded, so each coordinate is the float nearest c/resolution
    points = counts / resolution
    return PortfolioGrid(m=m, step=pitch, counts=counts, points=points)


def grid_weights(grid: PortfolioGrid, density: PriorDensity) -> PortfolioGrid:
    """Attach prior weights to every grid point.

    The Dirichlet(1/2, ..., 1/2) density is infinite on the boundary, so it is
    evaluated at each point shrunk toward the centroid by the factor (1 - step).

    Args:
        grid: Grid to weight.
        density: Prior density.

    Returns:
        New grid with normalized weights.
    """
    if grid.size < 1:
        msg = "grid has no points"
        raise InputValidationError(msg)
    if density is PriorDensity.UNIFORM:
        weights = np.full(grid.size, 1.0 / grid.size)
    else:
        epsilon = float(grid.step)
        shrunk = (1.0 - epsilon) * grid.points + epsilon / grid.m
        log_density = -0.5 * np.log(shrunk).sum(axis=1)
        unnormalized = np.exp(log_density - log_density.max())
        weights = unnormalized / math.fsum(unnormalized)
    return PortfolioGrid(
        m=grid.m,
        step=grid.step,
        counts=grid.counts,
        points=grid.points,
        weights=weights,
        density=density,
    )


def weighted_grid(
    m: int,
    step: float | str | Fraction,
    density: PriorDensity = PriorDensity.UNIFORM,
) -> PortfolioGrid:
    """Generate and weight a grid in one call."""
    return grid_weights(generate_grid(m, step), density)


def interior_point_count(m: int, resolution: int) -> int:
    """Number of lattice points with every coordinate strictly positive."""
    return math.comb(resolution - 1, m - 1)
