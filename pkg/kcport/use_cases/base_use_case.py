"""Base use case shared by the command-line workflows."""

from abc import ABC, abstractmethod
from collections.abc import Iterable

import pandas as pd
import structlog

from kcport.entities.artifacts import ArtifactBundle, TableArtifact
from kcport.entities.portfolio import SHARPE_DEFINITION, PerformanceReport, StrategyTrace
from kcport.entities.run_config import RunConfig
from kcport.settings.app_settings import AppSettings
from kcport.use_cases.computations.accounting import performance_report
from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface

logger = structlog.get_logger(__name__)


class BaseUseCase(ABC):
    """Base class for workflows: compute every artifact, then persist them together."""

    def __init__(self, settings: AppSettings, artifact_store: ArtifactStoreInterface) -> None:
        """Initialize base use case.

        Args:
            settings: Application settings (precision, threads, tolerances).
            artifact_store: Store receiving the finished bundle.
        """
        self.settings = settings
        self.artifact_store = artifact_store

    @abstractmethod
    def build(self, config: RunConfig) -> ArtifactBundle:
        """Compute the artifacts of one run without touching the filesystem.

        Args:
            config: Validated run configuration.

        Returns:
            Complete artifact bundle.

        Raises:
            InputValidationError: If an input is invalid.
            ComputationError: If a numerical step fails.
        """

    def execute(self, config: RunConfig) -> ArtifactBundle:
        """Build the bundle and write it when the run has an output directory.

        Args:
            config: Validated run configuration.

        Returns:
            The bundle that was written.
        """
        logger.info("workflow_started", subcommand=config.subcommand.value)
        bundle = self.build(config)
        if config.output_dir is not None and bundle.names():
            self.artifact_store.write_bundle(config.output_dir, bundle)
        logger.info("workflow_finished", subcommand=config.subcommand.value, files=bundle.names())
        return bundle

    def reports(self, traces: Iterable[StrategyTrace]) -> list[PerformanceReport]:
        """Performance reports of the traces long enough to have a Sharpe ratio.

        Shorter traces are left out of report.csv; their other artifacts are unaffected.
        """
        reports = []
        for trace in traces:
            if trace.n < 2:
                logger.warning("report_row_skipped", strategy=trace.strategy, periods=trace.n)
                continue
            reports.append(performance_report(trace))
        return reports

    def report_table(self, frame: pd.DataFrame) -> TableArtifact:
        """Report-precision table headed by the Sharpe ratio definition."""
        return TableArtifact(
            frame=frame,
            float_format=self.settings.report_float_format,
            header_comment=SHARPE_DEFINITION,
        )

    def path_table(self, frame: pd.DataFrame) -> TableArtifact:
        """Full-precision table."""
        return TableArtifact(frame=frame, float_format=self.settings.path_float_format)
