"""JSON/YAML block distribution specifications."""

import json
import math
from pathlib import Path
from typing import Any

import numpy as np
import structlog
import yaml
from pydantic import ValidationError

from kcport.entities.block_distribution import BlockDistribution
from kcport.entities.errors import InputValidationError
from kcport.use_cases.interfaces.distribution_repository_interface import (
    DistributionRepositoryInterface,
)

logger = structlog.get_logger(__name__)

FILE_PROBABILITY_TOLERANCE = 1e-9


class DistributionFileAdapter(DistributionRepositoryInterface):
    """Reads `{"k", "m", "support": [{"prob", "block"}, ...]}` documents.

    `.yaml`/`.yml` files are read with PyYAML, everything else as JSON.
    """

    def load_distribution(self, path: Path) -> BlockDistribution:
        """Parse and validate a distribution file.

        Probabilities must sum to 1 within 1e-9 and are then renormalized.

        Args:
            path: Specification file.

        Returns:
            Validated distribution.

        Raises:
            InputValidationError: On a missing file, malformed document,
                inconsistent shapes or nonpositive entries.
        """
        if not path.is_file():
            msg = f"distribution file not found: {path}"
            raise InputValidationError(msg)
        with path.open("r", encoding="utf-8") as f:
            try:
                document = (
                    yaml.safe_load(f) if path.suffix.lower() in {".yaml", ".yml"} else json.load(f)
                )
            except (json.JSONDecodeError, yaml.YAMLError) as exc:
                msg = f"{path}: malformed document ({exc})"
                raise InputValidationError(msg) from exc
        distribution = self.parse_document(document)
        logger.info(
            "distribution_loaded",
            path=str(path),
            k=distribution.k,
            m=distribution.m,
            support=distribution.support_size,
        )
        return distribution

    @staticmethod
    def parse_document(document: Any) -> BlockDistribution:
        """Validate an already decoded specification.

        Args:
            document: Mapping with keys k, m and support.

        Returns:
            Validated distribution.

        Raises:
            InputValidationError: If the document violates the schema.
        """
        if not isinstance(document, dict) or not {"k", "m", "support"} <= document.keys():
            msg = "distribution must be an object with keys k, m and support"
            raise InputValidationError(msg)
        k, m, support = document["k"], document["m"], document["support"]
        if not isinstance(k, int) or not isinstance(m, int) or k < 1 or m < 1:
            msg = f"k and m must be positive integers, got k={k!r}, m={m!r}"
            raise InputValidationError(msg)
        if not isinstance(support, list) or not support:
            msg = "support must be a non-empty list"
            raise InputValidationError(msg)

        probabilities = []
        blocks = []
        for index, outcome in enumerate(support):
            if not isinstance(outcome, dict) or not {"prob", "block"} <= outcome.keys():
                msg = f"outcome {index}: expected keys prob and block"
                raise InputValidationError(msg)
            try:
                block = np.array(outcome["block"], dtype=np.float64)
                probability = float(outcome["prob"])
            except (TypeError, ValueError) as exc:
                msg = f"outcome {index}: entries must be numbers"
                raise InputValidationError(msg) from exc
            if block.shape != (k, m):
                msg = (
                    f"outcome {index}: block must be {k} rows of {m} numbers, "
                    f"got shape {block.shape}"
                )
                raise InputValidationError(msg)
            if not np.all(np.isfinite(block)) or np.any(block <= 0):
                bad = block[~(np.isfinite(block) & (block > 0))][0]
                msg = f"outcome {index}: block entry {bad:g} is not positive"
                raise InputValidationError(msg)
            if not 0 < probability <= 1:
                msg = f"outcome {index}: probability {probability:g} outside (0, 1]"
                raise InputValidationError(msg)
            probabilities.append(probability)
            blocks.append(block)

        total = math.fsum(probabilities)
        if abs(total - 1.0) > FILE_PROBABILITY_TOLERANCE:
            msg = f"probabilities sum to {total:.12g}"
            raise InputValidationError(msg)
        try:
            return BlockDistribution(
                k=k,
                m=m,
                probabilities=np.array(probabilities) / total,
                blocks=np.stack(blocks),
            )
        except ValidationError as exc:
            msg = exc.errors()[0]["msg"]
            raise InputValidationError(msg) from exc
