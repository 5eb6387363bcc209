"""Market data adapters."""

from kcport.adapters.market_data.csv_price_adapter import CsvPriceAdapter

__all__ = ["CsvPriceAdapter"]
