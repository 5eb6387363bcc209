"""Price data repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path

from kcport.entities.market_data import PriceTable, ReturnsSequence


class PriceDataRepositoryInterface(ABC):
    """Interface for loading price tables and the returns derived from them."""

    @abstractmethod
    def load_price_table(self, path: Path) -> PriceTable:
        """Read a wide price table.

        Args:
            path: Source file.

        Returns:
            Validated price table.

        Raises:
            InputValidationError: If the file is missing or malformed.
        """

    @abstractmethod
    def load_returns(self, path: Path) -> ReturnsSequence:
        """Read prices and convert them into gross returns.

        Args:
            path: Source file.

        Returns:
            Returns sequence with n = rows - 1 periods.

        Raises:
            InputValidationError: If the file is missing or malformed.
        """
