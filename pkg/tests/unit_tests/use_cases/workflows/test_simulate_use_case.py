"""Unit tests for SimulateUseCase."""

import unittest
from pathlib import Path
from unittest.mock import Mock

from kcport.entities.block_distribution import BlockDistribution
from kcport.entities.run_config import RunConfig, Subcommand
from kcport.settings.app_settings import AppSettings
from kcport.use_cases.interfaces import (
    ArtifactStoreInterface,
    ChartRendererInterface,
    DistributionRepositoryInterface,
)
from kcport.use_cases.workflows import SimulateUseCase


def two_block_distribution() -> BlockDistribution:
    """k=2 market with independent, position-asymmetric marginals."""
    return BlockDistribution(
        k=2,
        m=2,
        probabilities=[0.25, 0.25, 0.25, 0.25],
        blocks=[
            [[2.0, 1.0], [0.5, 1.0]],
            [[2.0, 1.0], [1.0, 1.0]],
            [[1.0, 1.0], [0.5, 1.0]],
            [[1.0, 1.0], [1.0, 1.0]],
        ],
    )


class TestSimulateUseCase(unittest.TestCase):
    """Test suite for SimulateUseCase."""

    def setUp(self) -> None:
        """Set up test fixtures."""
        self.distribution_repository = Mock(spec=DistributionRepositoryInterface)
        self.distribution_repository.load_distribution.return_value = two_block_distribution()
        self.chart_renderer = Mock(spec=ChartRendererInterface)
        self.chart_renderer.render_lines.return_value = "<svg/>"
        self.use_case = SimulateUseCase(
            AppSettings(threads=1, kt_test_tuples=50, _env_file=None),
            Mock(spec=ArtifactStoreInterface),
            self.distribution_repository,
            self.chart_renderer,
        )
        self.config = RunConfig(
            subcommand=Subcommand.SIMULATE,
            distribution_path=Path("dist.json"),
            output_dir=Path("out"),
            blocks=40,
            seed=7,
        )

    def test_a_bundle_contents(self) -> None:
        """Test the default cycle length is the block length."""
        bundle = self.use_case.build(self.config)

        self.assertEqual(
            sorted(bundle.tables),
            ["convergence.csv", "kelly.csv", "report.csv", "simulated_returns.csv", "trace_k2.csv"],
        )
        self.assertEqual(len(bundle.tables["simulated_returns.csv"].frame), 80)
        self.assertEqual(
            list(bundle.tables["report.csv"].frame["strategy"]),
            ["2-log-optimal", "2-PUP", "Uniform CRP"],
        )

    def test_a_kelly_table(self) -> None:
        """Test the Kelly table holds the optimal vertices, rate and certificate."""
        kelly = self.use_case.build(self.config).tables["kelly.csv"].frame

        self.assertEqual(list(kelly["position"]), [0, 1])
        self.assertAlmostEqual(kelly.loc[0, "asset_0"], 1.0, places=6)
        self.assertAlmostEqual(kelly.loc[1, "asset_1"], 1.0, places=6)
        self.assertAlmostEqual(kelly.loc[0, "rate"], 0.173287, delta=1e-6)
        self.assertLessEqual(kelly.loc[0, "kt_max_expectation"], 1.0 + 1e-9)

    def test_a_convergence_table(self) -> None:
        """Test convergence rows are sampled at every block boundary per strategy."""
        convergence = self.use_case.build(self.config).tables["convergence.csv"].frame

        self.assertEqual(
            list(convergence["strategy"].unique()), ["2-log-optimal", "2-PUP", "Uniform CRP"]
        )
        self.assertEqual(len(convergence), 3 * 40)
        self.assertEqual(
            list(convergence.columns),
            ["strategy", "block", "growth_rate", "optimal_rate", "abs_error", "tolerance"],
        )

    def test_a_requested_cycle_lengths(self) -> None:
        """Test explicit k values replace the default and the chart is rendered."""
        config = self.config.model_copy(update={"k_values": (1, 4), "svg": True})

        bundle = self.use_case.build(config)

        self.assertIn("trace_k1.csv", bundle.tables)
        self.assertIn("trace_k4.csv", bundle.tables)
        self.assertNotIn("trace_k2.csv", bundle.tables)
        self.assertEqual(list(bundle.texts), ["growth_convergence.svg"])
        series = self.chart_renderer.render_lines.call_args.args[3]
        self.assertEqual(
            list(series), ["2-log-optimal", "1-PUP", "4-PUP", "Uniform CRP", "optimal rate"]
        )

    def test_a_deterministic(self) -> None:
        """Test equal seeds give equal simulated returns."""
        first = self.use_case.build(self.config).tables["simulated_returns.csv"].frame
        second = self.use_case.build(self.config).tables["simulated_returns.csv"].frame

        self.assertTrue(first.equals(second))


if __name__ == "__main__":
    unittest.main()
