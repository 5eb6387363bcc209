"""Unit tests for market data entities."""

import unittest

import numpy as np
from pydantic import ValidationError

from kcport.entities.market_data import PriceTable, ReturnsSequence


class TestPriceTable(unittest.TestCase):
    """Test suite for PriceTable."""

    def test_a_accepts_increasing_dates(self) -> None:
        """Test a well-formed table validates."""
        table = PriceTable(
            dates=("2020-01-02", "2020-01-03"),
            symbols=("A", "B"),
            prices=[[100.0, 50.0], [110.0, 40.0]],
        )

        self.assertEqual(table.prices.shape, (2, 2))

    def test_a_rejects_unordered_dates(self) -> None:
        """Test dates must be strictly increasing."""
        with self.assertRaises(ValidationError):
            PriceTable(
                dates=("2020-01-03", "2020-01-02"),
                symbols=("A",),
                prices=[[1.0], [2.0]],
            )

    def test_a_orders_numeric_labels_numerically(self) -> None:
        """Test numeric labels compare as numbers, so 9 precedes 10."""
        table = PriceTable(dates=("9", "10"), symbols=("A",), prices=[[1.0], [2.0]])

        self.assertEqual(table.dates, ("9", "10"))

    def test_a_rejects_nonpositive_price(self) -> None:
        """Test zero prices are rejected."""
        with self.assertRaises(ValidationError):
            PriceTable(dates=("1", "2"), symbols=("A",), prices=[[1.0], [0.0]])


class TestReturnsSequence(unittest.TestCase):
    """Test suite for ReturnsSequence."""

    def test_a_default_names(self) -> None:
        """Test positional asset names and 1-based period labels."""
        returns = ReturnsSequence(values=np.ones((2, 3)))

        self.assertEqual(returns.asset_names(), ("asset_0", "asset_1", "asset_2"))
        self.assertEqual(returns.period_labels(), ("1", "2"))

    def test_a_rejects_nonpositive_entry(self) -> None:
        """Test returns must be strictly positive."""
        with self.assertRaises(ValidationError):
            ReturnsSequence(values=[[1.0, -0.5]])

    def test_a_rejects_label_mismatch(self) -> None:
        """Test labels must match the period count."""
        with self.assertRaises(ValidationError):
            ReturnsSequence(values=np.ones((2, 2)), labels=("only one",))


if __name__ == "__main__":
    unittest.main()
