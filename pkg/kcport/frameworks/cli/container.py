"""Dependency injection container wiring adapters to use case interfaces."""

from lagom import Container

from kcport.adapters.artifacts.csv_artifact_store import CsvArtifactStore
from kcport.adapters.charts.svg_chart_adapter import SvgChartAdapter
from kcport.adapters.distributions.distribution_file_adapter import DistributionFileAdapter
from kcport.adapters.market_data.csv_price_adapter import CsvPriceAdapter
from kcport.settings.app_settings import AppSettings
from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface
from kcport.use_cases.interfaces.chart_renderer_interface import ChartRendererInterface
from kcport.use_cases.interfaces.distribution_repository_interface import (
    DistributionRepositoryInterface,
)
from kcport.use_cases.interfaces.price_data_repository_interface import (
    PriceDataRepositoryInterface,
)


def build_container(settings: AppSettings) -> Container:
    """Container resolving every use case with the file-based adapters.

    Args:
        settings: Settings instance shared by all use cases.

    Returns:
        Configured container.
    """
    container = Container()
    container[AppSettings] = settings
    container[PriceDataRepositoryInterface] = CsvPriceAdapter
    container[DistributionRepositoryInterface] = DistributionFileAdapter
    container[ArtifactStoreInterface] = CsvArtifactStore
    container[ChartRendererInterface] = lambda: SvgChartAdapter()
    return container
