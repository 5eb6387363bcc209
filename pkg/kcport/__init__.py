"""kcport package initialization."""

__version__ = "1.0.0"
__author__ = "kcport Team"
__description__ = "Growth-optimal k-cyclic portfolio toolkit"

from kcport.entities import (
    BlockDistribution,
    Portfolio,
    PortfolioGrid,
    ReturnsSequence,
    StrategyTrace,
)

__all__ = [
    "BlockDistribution",
    "Portfolio",
    "PortfolioGrid",
    "ReturnsSequence",
    "StrategyTrace",
]
