"""Block distribution repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path

from kcport.entities.block_distribution import BlockDistribution


class DistributionRepositoryInterface(ABC):
    """Interface for loading finite-support block distributions."""

    @abstractmethod
    def load_distribution(self, path: Path) -> BlockDistribution:
        """Read and validate a distribution specification.

        Args:
            path: Source file.

        Returns:
            Validated distribution.

        Raises:
            InputValidationError: If the specification is invalid.
        """
