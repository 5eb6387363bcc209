"""Use case interfaces following Clean Architecture principles."""

from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface
from kcport.use_cases.interfaces.chart_renderer_interface import ChartRendererInterface
from kcport.use_cases.interfaces.distribution_repository_interface import (
    DistributionRepositoryInterface,
)
from kcport.use_cases.interfaces.price_data_repository_interface import (
    PriceDataRepositoryInterface,
)

__all__ = [
    "ArtifactStoreInterface",
    "ChartRendererInterface",
    "DistributionRepositoryInterface",
    "PriceDataRepositoryInterface",
]
