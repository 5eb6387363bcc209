"""Output artifacts produced by workflows and persisted by the artifact store."""

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

REPORT_FLOAT_FORMAT = "%.6f"
PATH_FLOAT_FORMAT = "%.17g"


class TableArtifact(BaseModel):
    """A CSV table with its float formatting and optional comment header."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    frame: pd.DataFrame = Field(description="Table contents")
    float_format: str = Field(
        default=PATH_FLOAT_FORMAT,
        description="printf-style float format",
        examples=[REPORT_FLOAT_FORMAT, PATH_FLOAT_FORMAT],
    )
    header_comment: str | None = Field(
        default=None,
        description="Line written before the header, prefixed with '# '",
    )


class TextArtifact(BaseModel):
    """A text file such as an SVG chart."""

    model_config = ConfigDict(frozen=True)

    content: str = Field(description="File contents")


class ArtifactBundle(BaseModel):
    """Named artifacts of one run, written together or not at all."""

    model_config = ConfigDict(frozen=True)

    tables: dict[str, TableArtifact] = Field(default_factory=dict, description="CSV files by name")
    texts: dict[str, TextArtifact] = Field(default_factory=dict, description="Text files by name")
    stdout: str | None = Field(default=None, description="Text printed on standard output")

    def names(self) -> list[str]:
        """All file names in the bundle."""
        return [*self.tables, *self.texts]
