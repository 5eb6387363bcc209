"""Atomic CSV and text artifact writer."""

import os
import tempfile
from pathlib import Path

import pandas as pd
import structlog

from kcport.entities.artifacts import ArtifactBundle, TableArtifact
from kcport.entities.errors import InputValidationError
from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface

logger = structlog.get_logger(__name__)


def render_table(artifact: TableArtifact) -> str:
    """CSV text of a table artifact with `\\n` line endings."""
    body = artifact.frame.to_csv(
        index=False,
        float_format=artifact.float_format,
        lineterminator="\n",
    )
    if artifact.header_comment is None:
        return body
    return f"# {artifact.header_comment}\n{body}"


def _stage(target: Path, content: str) -> Path:
    """Write content to a synced sibling temporary file of the target."""
    handle = tempfile.NamedTemporaryFile(
        mode="w",
        encoding="utf-8",
        newline="",
        dir=target.parent,
        prefix=f".{target.name}.",
        suffix=".tmp",
        delete=False,
    )
    try:
        with handle:
            handle.write(content)
            handle.flush()
            os.fsync(handle.fileno())
    except BaseException:
        Path(handle.name).unlink(missing_ok=True)
        raise
    return Path(handle.name)


class CsvArtifactStore(ArtifactStoreInterface):
    """Writes bundles through staged temporary files and renames."""

    def write_bundle(self, output_dir: Path, bundle: ArtifactBundle) -> list[Path]:
        """Render and stage every artifact, then rename them into place.

        A failure while staging or renaming removes the staged files and the
        files of this bundle already renamed, so no partial bundle remains.

        Args:
            output_dir: Destination directory.
            bundle: Artifacts to write.

        Returns:
            Paths written, in bundle order.

        Raises:
            InputValidationError: If the directory cannot be created or written.
        """
        rendered = {name: render_table(table) for name, table in bundle.tables.items()}
        rendered.update({name: text.content for name, text in bundle.texts.items()})
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            msg = f"output directory not writable: {output_dir} ({exc.strerror})"
            raise InputValidationError(msg) from exc
        if not os.access(output_dir, os.W_OK):
            msg = f"output directory not writable: {output_dir}"
            raise InputValidationError(msg)

        staged: list[tuple[Path, Path]] = []
        written: list[Path] = []
        try:
            for name, content in rendered.items():
                target = output_dir / name
                staged.append((_stage(target, content), target))
            for temporary, target in staged:
                os.replace(temporary, target)
                written.append(target)
        except BaseException:
            for path in [temporary for temporary, _ in staged] + written:
                path.unlink(missing_ok=True)
            logger.error("bundle_rolled_back", output_dir=str(output_dir), written=len(written))
            raise
        logger.info("artifacts_written", output_dir=str(output_dir), files=len(written))
        return written

    def read_table(self, path: Path) -> pd.DataFrame:
        """Read a table written by this store, skipping comment lines.

        Raises:
            InputValidationError: If the file is missing or not a CSV table.
        """
        if not path.is_file():
            msg = f"input file not found: {path}"
            raise InputValidationError(msg)
        try:
            return pd.read_csv(path, comment="#")
        except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
            msg = f"{path}: not a CSV table ({exc})"
            raise InputValidationError(msg) from exc
