"""Unit tests for RunConfig."""

import unittest
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from kcport.entities.run_config import RunConfig, Subcommand


class TestRunConfig(unittest.TestCase):
    """Test suite for RunConfig."""

    def test_a_backtest_requires_input_and_output(self) -> None:
        """Test backtest cannot run without an input file."""
        with self.assertRaisesRegex(ValidationError, "input_path"):
            RunConfig(subcommand=Subcommand.BACKTEST, output_dir=Path("out"))

    def test_a_rejects_nonpositive_k(self) -> None:
        """Test cycle lengths must be at least one."""
        with self.assertRaises(ValidationError):
            RunConfig(subcommand=Subcommand.BOUNDS, m=2, n=5, k_values=(0,))

    def test_a_rejects_duplicate_k(self) -> None:
        """Test cycle lengths must be distinct."""
        with self.assertRaises(ValidationError):
            RunConfig(subcommand=Subcommand.BOUNDS, m=2, n=5, k_values=(2, 2))

    def test_a_rejects_step_without_integer_reciprocal(self) -> None:
        """Test the grid pitch must divide one."""
        with self.assertRaisesRegex(ValidationError, "step must divide 1"):
            RunConfig(subcommand=Subcommand.BOUNDS, m=2, n=5, grid_step=Fraction(3, 10))

    def test_a_report_requires_inputs(self) -> None:
        """Test report needs at least one file to merge."""
        with self.assertRaises(ValidationError):
            RunConfig(subcommand=Subcommand.REPORT, output_dir=Path("out"))

    def test_a_cycle_lengths_default(self) -> None:
        """Test the default cycle length applies when none is given."""
        config = RunConfig(subcommand=Subcommand.BOUNDS, m=2, n=5)

        self.assertEqual(config.cycle_lengths(), (1,))
        self.assertEqual(config.cycle_lengths(default=3), (3,))


if __name__ == "__main__":
    unittest.main()
