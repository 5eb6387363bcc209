"""Core entities package for kcport."""

from kcport.entities.artifacts import ArtifactBundle, TableArtifact, TextArtifact
from kcport.entities.benchmark import KccBenchmark, RegretSeries, SubsequenceProfile
from kcport.entities.block_distribution import BlockDistribution, KLogOptimal
from kcport.entities.errors import ComputationError, InputValidationError, KcportError
from kcport.entities.market_data import (
    CyclicDecomposition,
    PriceTable,
    ReturnsSequence,
    Subsequence,
)
from kcport.entities.portfolio import (
    SHARPE_DEFINITION,
    PerformanceReport,
    Portfolio,
    StrategyTrace,
)
from kcport.entities.run_config import RunConfig, Subcommand
from kcport.entities.simplex_grid import PortfolioGrid, PriorDensity
from kcport.entities.universal_state import UpState

__all__ = [
    "SHARPE_DEFINITION",
    "ArtifactBundle",
    "BlockDistribution",
    "ComputationError",
    "CyclicDecomposition",
    "InputValidationError",
    "KLogOptimal",
    "KccBenchmark",
    "KcportError",
    "PerformanceReport",
    "Portfolio",
    "PortfolioGrid",
    "PriceTable",
    "PriorDensity",
    "RegretSeries",
    "ReturnsSequence",
    "RunConfig",
    "StrategyTrace",
    "Subcommand",
    "Subsequence",
    "SubsequenceProfile",
    "TableArtifact",
    "TextArtifact",
    "UpState",
]
