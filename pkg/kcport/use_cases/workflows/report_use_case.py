"""Merge of several performance tables into one."""

import pandas as pd
import structlog

from kcport.entities.artifacts import ArtifactBundle
from kcport.entities.errors import InputValidationError
from kcport.entities.run_config import RunConfig
from kcport.use_cases.base_use_case import BaseUseCase
from kcport.use_cases.workflows.tables import REPORT_COLUMNS

logger = structlog.get_logger(__name__)


class ReportUseCase(BaseUseCase):
    """Concatenates report.csv files in the given order, tagging each row with its source."""

    def build(self, config: RunConfig) -> ArtifactBundle:
        """Validate every input's columns, then merge.

        Raises:
            InputValidationError: If an input lacks the report columns.
        """
        frames = []
        for path in config.report_inputs:
            frame = self.artifact_store.read_table(path)
            missing = [column for column in REPORT_COLUMNS if column not in frame.columns]
            if missing:
                msg = f"{path}: missing report columns {', '.join(missing)}"
                raise InputValidationError(msg)
            frame = frame[list(REPORT_COLUMNS)].copy()
            frame["source"] = str(path)
            frames.append(frame)
        merged = pd.concat(frames, ignore_index=True)
        logger.info("reports_merged", inputs=len(frames), rows=len(merged))
        return ArtifactBundle(tables={"report.csv": self.report_table(merged)})
