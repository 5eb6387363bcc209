"""Wide-format CSV price ingestion."""

import csv
from pathlib import Path

import numpy as np
import pandas as pd
import structlog
from pydantic import ValidationError

from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import PriceTable, ReturnsSequence
from kcport.use_cases.interfaces.price_data_repository_interface import (
    PriceDataRepositoryInterface,
)

logger = structlog.get_logger(__name__)

# data row r of the frame sits on line r + 2 of the file (header is line 1)
_FIRST_DATA_LINE = 2


def _check_field_counts(path: Path) -> None:
    """Reject any row whose field count differs from the header's."""
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle, skipinitialspace=True)
        width = None
        for row in reader:
            if not row:
                continue
            if width is None:
                width = len(row)
            elif len(row) != width:
                msg = (
                    f"{path}: ragged row at line {reader.line_num} "
                    f"({len(row)} fields, header has {width})"
                )
                raise InputValidationError(msg)


class CsvPriceAdapter(PriceDataRepositoryInterface):
    """Reads `date,SYM1,...,SYMm` price files with one row per period."""

    def load_price_table(self, path: Path) -> PriceTable:
        """Parse and validate a wide price CSV.

        Args:
            path: CSV file, UTF-8, comma-delimited, `.` decimal separator.

        Returns:
            Validated price table.

        Raises:
            InputValidationError: If the file is missing, ragged, unparsable
                or holds a nonpositive price; messages name the offending cell.
        """
        if not path.is_file():
            msg = f"input file not found: {path}"
            raise InputValidationError(msg)
        _check_field_counts(path)
        try:
            frame = pd.read_csv(
                path,
                dtype=str,
                keep_default_na=False,
                skipinitialspace=True,
                encoding="utf-8",
            )
        except pd.errors.EmptyDataError as exc:
            msg = f"{path}: need at least two price rows"
            raise InputValidationError(msg) from exc
        except pd.errors.ParserError as exc:
            msg = f"{path}: ragged row ({exc})"
            raise InputValidationError(msg) from exc

        if frame.shape[1] < 2:
            msg = f"{path}: header must be date followed by at least one symbol"
            raise InputValidationError(msg)
        if frame.shape[0] < 2:
            msg = f"{path}: need at least two price rows"
            raise InputValidationError(msg)

        symbols = tuple(str(name).strip() for name in frame.columns[1:])
        prices = frame.iloc[:, 1:].apply(pd.to_numeric, errors="coerce").to_numpy(np.float64)
        invalid = ~(np.isfinite(prices) & (prices > 0))
        if invalid.any():
            row, column = (int(i) for i in np.argwhere(invalid)[0])
            raw = frame.iat[row, column + 1]
            problem = "unparsable" if np.isnan(prices[row, column]) else "nonpositive"
            msg = (
                f"{path}: {problem} price {raw!r} at line {row + _FIRST_DATA_LINE}, "
                f"column {symbols[column]}"
            )
            raise InputValidationError(msg)

        try:
            table = PriceTable(
                dates=tuple(frame.iloc[:, 0].str.strip()),
                symbols=symbols,
                prices=prices,
            )
        except ValidationError as exc:
            msg = f"{path}: {exc.errors()[0]['msg']}"
            raise InputValidationError(msg) from exc
        logger.info("prices_loaded", path=str(path), rows=len(table.dates), assets=len(symbols))
        return table

    def load_returns(self, path: Path) -> ReturnsSequence:
        """Gross returns x_t = p_{t+1} / p_t of a price CSV.

        Args:
            path: CSV file.

        Returns:
            Returns labelled with the closing date of each period.
        """
        table = self.load_price_table(path)
        return ReturnsSequence(
            values=table.prices[1:] / table.prices[:-1],
            labels=table.dates[1:],
            symbols=table.symbols,
        )
