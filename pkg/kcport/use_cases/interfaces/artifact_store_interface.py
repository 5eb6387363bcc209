"""Artifact store interface."""

from abc import ABC, abstractmethod
from pathlib import Path

import pandas as pd

from kcport.entities.artifacts import ArtifactBundle


class ArtifactStoreInterface(ABC):
    """Interface for persisting run outputs and reading earlier ones back."""

    @abstractmethod
    def write_bundle(self, output_dir: Path, bundle: ArtifactBundle) -> list[Path]:
        """Write every artifact of a bundle.

        Args:
            output_dir: Destination directory, created when missing.
            bundle: Artifacts to write.

        Returns:
            Paths written.

        Raises:
            InputValidationError: If the directory is not writable.
        """

    @abstractmethod
    def read_table(self, path: Path) -> pd.DataFrame:
        """Read a CSV table written by `write_bundle`.

        Args:
            path: Source file.

        Returns:
            Table contents.

        Raises:
            InputValidationError: If the file is missing or malformed.
        """
