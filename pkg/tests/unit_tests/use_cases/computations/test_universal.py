"""Unit tests for the Universal Portfolio and k-parallel strategy."""

import math
import unittest

import numpy as np

from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.simplex_grid import PriorDensity
from kcport.entities.universal_state import UpState
from kcport.use_cases.computations.grid_kernels import grid_objective
from kcport.use_cases.computations.simplex import generate_grid, weighted_grid
from kcport.use_cases.computations.universal import (
    run_kpup,
    run_up,
    up_observe,
    up_portfolio,
)
from tests.fixtures import random_returns


class TestUpState(unittest.TestCase):
    """Test suite for up_portfolio and up_observe."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.grid = weighted_grid(2, 0.01, PriorDensity.UNIFORM)

    def test_a_empty_history_is_uniform(self) -> None:
        """Test the initial portfolio is the centroid under a symmetric prior."""
        for density in PriorDensity:
            with self.subTest(density=density):
                state = UpState.initial(weighted_grid(3, 0.1, density))
                np.testing.assert_allclose(up_portfolio(state).weights, [1 / 3] * 3, atol=1e-12)

    def test_a_one_observation_grid_value(self) -> None:
        """Test after x=(2,1) the 101-point grid gives sum b(1+b) / sum (1+b) = 167/300."""
        state = up_observe(UpState.initial(self.grid), np.array([2.0, 1.0]))

        np.testing.assert_allclose(
            up_portfolio(state).weights, [167 / 300, 133 / 300], rtol=0, atol=1e-12
        )

    def test_a_one_observation_approaches_continuum(self) -> None:
        """Test after x=(2,1) a 0.005 grid is within 1e-3 of the continuum value (5/9, 4/9)."""
        grid = weighted_grid(2, 0.005, PriorDensity.UNIFORM)
        state = up_observe(UpState.initial(grid), np.array([2.0, 1.0]))

        np.testing.assert_allclose(up_portfolio(state).weights, [5 / 9, 4 / 9], atol=1e-3)

    def test_a_unit_returns_keep_uniform(self) -> None:
        """Test all-ones history leaves the state and portfolio unchanged."""
        state = UpState.initial(self.grid)
        for _ in range(5):
            state = up_observe(state, np.ones(2))

        np.testing.assert_array_equal(state.log_wealth_per_point, np.zeros(self.grid.size))
        np.testing.assert_allclose(up_portfolio(state).weights, [0.5, 0.5], atol=1e-12)
        self.assertEqual(state.observations, 5)

    def test_a_vertex_gains_log_two(self) -> None:
        """Test observing (2,1) adds log 2 to the vertex (1,0)."""
        state = up_observe(UpState.initial(self.grid), np.array([2.0, 1.0]))

        self.assertEqual(state.log_wealth_per_point[-1], math.log(2.0))

    def test_a_observations_commute(self) -> None:
        """Test the order of two observations does not change the state."""
        a, b = np.array([1.3, 0.7]), np.array([0.6, 1.9])
        start = UpState.initial(self.grid)

        first = up_observe(up_observe(start, a), b)
        second = up_observe(up_observe(start, b), a)

        np.testing.assert_allclose(
            first.log_wealth_per_point, second.log_wealth_per_point, atol=1e-15
        )

    def test_a_rejects_nonpositive_row(self) -> None:
        """Test nonpositive returns are rejected."""
        with self.assertRaises(InputValidationError):
            up_observe(UpState.initial(self.grid), np.array([1.0, 0.0]))

    def test_a_rejects_wrong_length(self) -> None:
        """Test rows must have m entries."""
        with self.assertRaises(InputValidationError):
            up_observe(UpState.initial(self.grid), np.array([1.0, 1.0, 1.0]))


class TestRunKpup(unittest.TestCase):
    """Test suite for run_kpup."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.grid = weighted_grid(2, 0.05, PriorDensity.UNIFORM)

    def test_a_first_k_portfolios_uniform(self) -> None:
        """Test the first min(k, n) periods play the uniform portfolio."""
        returns = random_returns(seed=4, n=10, m=2)

        for k in (1, 3, 12):
            with self.subTest(k=k):
                trace = run_kpup(returns, k, self.grid)
                np.testing.assert_array_equal(trace.portfolios[: min(k, 10)], 0.5)
                self.assertEqual(trace.strategy, f"{k}-PUP")

    def test_a_k_one_equals_sequential_up(self) -> None:
        """Test k=1 replays the plain learner over the whole sequence."""
        returns = random_returns(seed=6, n=15, m=2)
        state = UpState.initial(self.grid)
        expected = []
        for row in returns.values:
            expected.append(up_portfolio(state).weights if state.observations else (0.5, 0.5))
            state = up_observe(state, row)

        np.testing.assert_array_equal(run_up(returns, self.grid).portfolios, expected)

    def test_a_two_parallel_replay_is_bitwise(self) -> None:
        """Test period 2t uses the learner fed only the earlier (1,2) rows."""
        returns = ReturnsSequence(values=np.tile([[1.0, 2.0], [1.0, 0.5]], (6, 1)))
        trace = run_kpup(returns, 2, self.grid)

        state = UpState.initial(self.grid)
        for t in range(1, 6):
            state = up_observe(state, np.array([1.0, 2.0]))
            np.testing.assert_array_equal(trace.portfolios[2 * t], up_portfolio(state).weights)

    def test_a_mixture_identity(self) -> None:
        """Test S_n(UP) equals the prior-weighted average of grid CRP wealths."""
        returns = random_returns(seed=9, n=200, m=3)
        grid = weighted_grid(3, 0.05, PriorDensity.DIRICHLET_HALF)

        trace = run_up(returns, grid)
        grid_log_wealth = grid_objective(grid.points, returns.values)
        shift = grid_log_wealth.max()
        mixture_log_wealth = shift + math.log(
            float(grid.require_weights() @ np.exp(grid_log_wealth - shift))
        )

        self.assertAlmostEqual(
            math.exp(trace.log_wealth[-1] - mixture_log_wealth), 1.0, delta=1e-9
        )
        self.assertLess(trace.log_wealth[-1], shift)

    def test_a_threads_do_not_change_result(self) -> None:
        """Test worker count leaves the trace bitwise identical."""
        returns = random_returns(seed=10, n=40, m=2)

        single = run_kpup(returns, 3, self.grid, max_workers=1)
        pooled = run_kpup(returns, 3, self.grid, max_workers=4)

        np.testing.assert_array_equal(single.log_wealth, pooled.log_wealth)

    def test_a_rejects_unweighted_grid(self) -> None:
        """Test the prior must be populated."""
        with self.assertRaises(ValueError):
            run_kpup(random_returns(seed=0, n=3, m=2), 1, generate_grid(2, 0.5))


if __name__ == "__main__":
    unittest.main()
