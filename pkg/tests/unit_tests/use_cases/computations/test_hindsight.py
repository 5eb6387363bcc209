"""Unit tests for hindsight benchmarks, regret and bounds."""

import math
import unittest

import numpy as np

from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.portfolio import Portfolio
from kcport.entities.simplex_grid import PriorDensity
from kcport.use_cases.computations.accounting import cyclic_constant_trace
from kcport.use_cases.computations.hindsight import (
    best_crp,
    best_kcc,
    check_consistency,
    growth_rate_difference,
    refine_crp,
    regret_bound,
    running_best_kcc,
    subsequence_profile,
)
from kcport.use_cases.computations.simplex import generate_grid, weighted_grid
from kcport.use_cases.computations.universal import run_kpup
from tests.fixtures import alternating_returns, random_returns


class TestBestCrp(unittest.TestCase):
    """Test suite for best_crp and refine_crp."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.grid = generate_grid(2, 0.05)

    def test_a_dominating_asset(self) -> None:
        """Test x_t = (2,1) picks (1,0) with log-wealth n log 2."""
        returns = ReturnsSequence(values=np.tile([2.0, 1.0], (5, 1)))

        portfolio, log_wealth = best_crp(returns, self.grid)

        self.assertEqual(portfolio.weights, (1.0, 0.0))
        self.assertAlmostEqual(log_wealth, 5 * math.log(2.0), places=12)

    def test_a_alternating_market(self) -> None:
        """Test the alternating market picks (0.5, 0.5) with cycle wealth 1.125."""
        portfolio, log_wealth = best_crp(alternating_returns(4), self.grid)

        self.assertEqual(portfolio.weights, (0.5, 0.5))
        self.assertAlmostEqual(log_wealth, 4 * math.log(1.125), places=12)

    def test_a_single_period(self) -> None:
        """Test one period (2,1) gives wealth 2 at (1,0)."""
        portfolio, log_wealth = best_crp(ReturnsSequence(values=[[2.0, 1.0]]), self.grid)

        self.assertEqual(portfolio.weights, (1.0, 0.0))
        self.assertAlmostEqual(math.exp(log_wealth), 2.0, places=12)

    def test_a_ties_break_lexicographically(self) -> None:
        """Test equal objectives choose the lexicographically smallest point."""
        portfolio, _ = best_crp(ReturnsSequence(values=[[1.0, 1.0]]), self.grid)

        self.assertEqual(portfolio.weights, (0.0, 1.0))

    def test_a_refine_reaches_continuum_optimum(self) -> None:
        """Test refinement from (0.4, 0.6) converges to (0.5, 0.5)."""
        refined = refine_crp(alternating_returns(10), Portfolio(weights=(0.4, 0.6)), 1e-10)

        np.testing.assert_allclose(refined.weights, [0.5, 0.5], atol=1e-5)

    def test_a_refine_fixed_point(self) -> None:
        """Test refining the optimum keeps its objective."""
        returns = alternating_returns(10)
        start = Portfolio(weights=(0.5, 0.5))

        refined = refine_crp(returns, start, 1e-10)

        before = np.log(returns.values @ start.as_array()).mean()
        after = np.log(returns.values @ refined.as_array()).mean()
        self.assertAlmostEqual(after, before, delta=1e-10)

    def test_a_refine_vertex_optimum(self) -> None:
        """Test an interior start moves to the dominating vertex."""
        returns = ReturnsSequence(values=np.tile([2.0, 1.0], (5, 1)))

        refined = refine_crp(returns, Portfolio(weights=(0.3, 0.7)), 1e-10)

        value = np.log(returns.values @ refined.as_array()).mean()
        self.assertAlmostEqual(value, math.log(2.0), delta=1e-10)

    def test_a_refine_never_decreases_grid_objective(self) -> None:
        """Test refinement improves on the grid optimum."""
        returns = random_returns(seed=21, n=60, m=3)
        grid = generate_grid(3, 0.1)
        grid_best, grid_log_wealth = best_crp(returns, grid)

        refined = refine_crp(returns, grid_best)

        refined_log_wealth = math.fsum(np.log(returns.values @ refined.as_array()))
        self.assertGreaterEqual(refined_log_wealth, grid_log_wealth - 1e-12)

    def test_a_rejects_asset_mismatch(self) -> None:
        """Test grid and returns must agree on m."""
        with self.assertRaises(InputValidationError):
            best_crp(random_returns(seed=0, n=4, m=3), self.grid)


class TestBestKcc(unittest.TestCase):
    """Test suite for best_kcc."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.grid = generate_grid(2, 0.05)

    def test_a_alternating_market_two_cycle(self) -> None:
        """Test k=2 holds (e_2, e_1) with log-wealth 2 log 2, above the 1-CC."""
        returns = alternating_returns(2)

        two = best_kcc(returns, 2, self.grid)
        one = best_kcc(returns, 1, self.grid)

        self.assertEqual([p.weights for p in two.portfolios], [(0.0, 1.0), (1.0, 0.0)])
        self.assertAlmostEqual(two.log_wealth, 2 * math.log(2.0), places=12)
        self.assertAlmostEqual(one.log_wealth, 2 * math.log(1.125), places=12)

    def test_a_k_at_least_n_takes_row_maxima(self) -> None:
        """Test k >= n earns the best asset of every period."""
        returns = random_returns(seed=8, n=5, m=2)

        benchmark = best_kcc(returns, 7, self.grid)

        self.assertAlmostEqual(
            benchmark.log_wealth, math.fsum(np.log(returns.values.max(axis=1))), places=12
        )
        self.assertEqual(benchmark.portfolios[6].weights, (0.5, 0.5))
        self.assertEqual(benchmark.subsequence_log_wealth[6], 0.0)

    def test_a_k_one_equals_best_crp(self) -> None:
        """Test the 1-CC benchmark is the best CRP."""
        returns = random_returns(seed=12, n=30, m=2)

        benchmark = best_kcc(returns, 1, self.grid)
        portfolio, log_wealth = best_crp(returns, self.grid)

        self.assertEqual(benchmark.portfolios[0], portfolio)
        self.assertEqual(benchmark.log_wealth, log_wealth)

    def test_a_factorization(self) -> None:
        """Test the total equals the sum of per-subsequence optima."""
        returns = random_returns(seed=13, n=31, m=3)

        benchmark = best_kcc(returns, 4, generate_grid(3, 0.1))

        self.assertAlmostEqual(
            benchmark.log_wealth, math.fsum(benchmark.subsequence_log_wealth), places=12
        )
        trace = cyclic_constant_trace(returns, benchmark.portfolios)
        self.assertAlmostEqual(trace.log_wealth[-1], benchmark.log_wealth, places=10)

    def test_a_divisibility_monotonicity(self) -> None:
        """Test best 2-CC <= best 4-CC <= best 8-CC exactly."""
        grid = generate_grid(3, 0.1)
        for seed in range(5):
            with self.subTest(seed=seed):
                returns = random_returns(seed=seed, n=80, m=3)
                values = [best_kcc(returns, k, grid).log_wealth for k in (1, 2, 4, 8)]
                self.assertEqual(values, sorted(values))

    def test_a_refined_benchmark_not_worse(self) -> None:
        """Test refinement never lowers the benchmark."""
        returns = random_returns(seed=14, n=40, m=2)

        plain = best_kcc(returns, 2, self.grid)
        refined = best_kcc(returns, 2, self.grid, refine=True)

        self.assertTrue(refined.refined)
        self.assertGreaterEqual(refined.log_wealth, plain.log_wealth - 1e-12)


class TestRegret(unittest.TestCase):
    """Test suite for regret bounds and consistency checks."""

    def test_a_regret_bound_values(self) -> None:
        """Test closed-form bound values."""
        self.assertAlmostEqual(regret_bound(1, 2, 1, PriorDensity.UNIFORM), 0.693147, delta=1e-6)
        self.assertAlmostEqual(
            regret_bound(1, 2, 1, PriorDensity.DIRICHLET_HALF), 1.039721, delta=1e-6
        )
        self.assertAlmostEqual(regret_bound(3, 4, 99, PriorDensity.UNIFORM), 41.446531, delta=1e-6)

    def test_a_regret_bound_rejects_zero(self) -> None:
        """Test k, m and n must be positive."""
        with self.assertRaises(InputValidationError):
            regret_bound(0, 2, 5, PriorDensity.UNIFORM)

    def test_a_running_benchmark_matches_prefix_optimum(self) -> None:
        """Test the running benchmark equals best_kcc on every prefix."""
        returns = random_returns(seed=15, n=20, m=2)
        grid = generate_grid(2, 0.1)

        running = running_best_kcc(returns, 3, grid)

        for horizon in (1, 2, 3, 7, 20):
            prefix = ReturnsSequence(values=returns.values[:horizon])
            self.assertAlmostEqual(
                running[horizon - 1], best_kcc(prefix, 3, grid).log_wealth, places=10
            )

    def test_a_strategy_equal_to_benchmark_has_zero_regret(self) -> None:
        """Test regret vanishes when the strategy is the benchmark."""
        returns = random_returns(seed=16, n=12, m=2)
        trace = cyclic_constant_trace(returns, (Portfolio.uniform(2),))

        series = check_consistency(trace, trace.log_wealth, 1, PriorDensity.UNIFORM)

        np.testing.assert_array_equal(series.regret, 0.0)
        self.assertTrue(series.is_consistent)

    def test_a_kpup_respects_bound(self) -> None:
        """Test k-PUP regret stays below the bound on random sequences."""
        for density in PriorDensity:
            grid = weighted_grid(3, 0.1, density)
            for seed, k in ((30, 1), (31, 2), (32, 3)):
                with self.subTest(density=density, k=k):
                    returns = random_returns(seed=seed, n=60, m=3)
                    trace = run_kpup(returns, k, grid)
                    series = check_consistency(
                        trace, running_best_kcc(returns, k, grid), k, density
                    )
                    self.assertTrue(series.is_consistent)
                    self.assertTrue(np.all(np.isfinite(series.ratio)))

    def test_a_length_mismatch(self) -> None:
        """Test benchmark and trace must cover the same horizons."""
        trace = cyclic_constant_trace(random_returns(seed=0, n=4, m=2), (Portfolio.uniform(2),))

        with self.assertRaises(InputValidationError):
            check_consistency(trace, np.zeros(3), 1, PriorDensity.UNIFORM)

    def test_a_growth_rate_difference(self) -> None:
        """Test the growth difference of a trace with itself is zero."""
        trace = cyclic_constant_trace(random_returns(seed=0, n=4, m=2), (Portfolio.uniform(2),))

        np.testing.assert_array_equal(growth_rate_difference(trace, trace), 0.0)


class TestSubsequenceProfile(unittest.TestCase):
    """Test suite for subsequence_profile."""

    def test_a_alternating_profile(self) -> None:
        """Test each position of the alternating market earns 2 with no variance."""
        returns = alternating_returns(3)
        benchmark = best_kcc(returns, 2, generate_grid(2, 0.5))

        profiles = subsequence_profile(returns, benchmark)

        self.assertEqual([p.size for p in profiles], [3, 3])
        self.assertEqual([p.average_return for p in profiles], [2.0, 1.0])
        self.assertEqual([p.variance for p in profiles], [0.0, 0.0])

    def test_a_empty_subsequence(self) -> None:
        """Test empty subsequences report NaN average and variance."""
        returns = random_returns(seed=0, n=2, m=2)
        benchmark = best_kcc(returns, 3, generate_grid(2, 0.5))

        profile = subsequence_profile(returns, benchmark)[2]

        self.assertEqual(profile.size, 0)
        self.assertTrue(math.isnan(profile.average_return))
        self.assertTrue(math.isnan(profile.variance))


if __name__ == "__main__":
    unittest.main()
