"""Artifact persistence adapters."""

from kcport.adapters.artifacts.csv_artifact_store import CsvArtifactStore

__all__ = ["CsvArtifactStore"]
