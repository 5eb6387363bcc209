"""One use case per command-line subcommand."""

from kcport.use_cases.workflows.backtest_use_case import BacktestUseCase
from kcport.use_cases.workflows.bounds_use_case import BoundsUseCase
from kcport.use_cases.workflows.hindsight_use_case import HindsightUseCase
from kcport.use_cases.workflows.report_use_case import ReportUseCase
from kcport.use_cases.workflows.simulate_use_case import SimulateUseCase

__all__ = [
    "BacktestUseCase",
    "BoundsUseCase",
    "HindsightUseCase",
    "ReportUseCase",
    "SimulateUseCase",
]
