"""Best strategies in hindsight for a price file."""

import structlog

from kcport.entities.artifacts import ArtifactBundle, TableArtifact
from kcport.entities.benchmark import KccBenchmark
from kcport.entities.errors import InputValidationError
from kcport.entities.market_data import ReturnsSequence
from kcport.entities.portfolio import PerformanceReport, StrategyTrace
from kcport.entities.run_config import RunConfig
from kcport.entities.simplex_grid import PortfolioGrid
from kcport.settings.app_settings import AppSettings
from kcport.use_cases.base_use_case import BaseUseCase
from kcport.use_cases.computations.accounting import buy_and_hold_trace, cyclic_constant_trace
from kcport.use_cases.computations.hindsight import best_kcc, subsequence_profile
from kcport.use_cases.computations.simplex import weighted_grid
from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface
from kcport.use_cases.interfaces.price_data_repository_interface import (
    PriceDataRepositoryInterface,
)
from kcport.use_cases.workflows.tables import (
    benchmark_frame,
    grid_frame,
    report_frame,
    subsequence_frame,
)

logger = structlog.get_logger(__name__)


class HindsightUseCase(BaseUseCase):
    """Best k-cyclic constant strategies and their subsequence profiles."""

    def __init__(
        self,
        settings: AppSettings,
        artifact_store: ArtifactStoreInterface,
        price_repository: PriceDataRepositoryInterface,
    ) -> None:
        """Initialize hindsight use case.

        Args:
            settings: Application settings.
            artifact_store: Store receiving the artifacts.
            price_repository: Source of the return sequence.
        """
        super().__init__(settings, artifact_store)
        self.price_repository = price_repository

    def load_inputs(self, config: RunConfig) -> tuple[ReturnsSequence, PortfolioGrid]:
        """Returns of the input file and the weighted grid for its asset count."""
        if config.input_path is None:
            msg = f"{config.subcommand.value} requires input_path"
            raise InputValidationError(msg)
        returns = self.price_repository.load_returns(config.input_path)
        step = config.grid_step or self.settings.default_grid_step(returns.m)
        grid = weighted_grid(returns.m, step, config.density)
        logger.info("grid_ready", m=grid.m, step=str(grid.step), points=grid.size)
        return returns, grid

    def benchmark(
        self,
        returns: ReturnsSequence,
        k: int,
        grid: PortfolioGrid,
        config: RunConfig,
    ) -> tuple[KccBenchmark, StrategyTrace]:
        """Best k-CC and its trace, labelled "Best {k}-CC"."""
        benchmark = best_kcc(
            returns,
            k,
            grid,
            refine=config.refine,
            tol=self.settings.refine_tol,
            max_workers=self.settings.worker_count,
        )
        trace = cyclic_constant_trace(returns, benchmark.portfolios, strategy=f"Best {k}-CC")
        return benchmark, trace

    def benchmark_tables(
        self,
        returns: ReturnsSequence,
        benchmark: KccBenchmark,
    ) -> dict[str, TableArtifact]:
        """benchmark_k{K}.csv and subsequences_k{K}.csv."""
        k = benchmark.k
        return {
            f"benchmark_k{k}.csv": self.path_table(
                benchmark_frame(benchmark, returns.asset_names())
            ),
            f"subsequences_k{k}.csv": self.path_table(
                subsequence_frame(subsequence_profile(returns, benchmark))
            ),
        }

    def buy_and_hold_reports(self, returns: ReturnsSequence) -> list[PerformanceReport]:
        """One buy-and-hold report per asset, in column order."""
        return self.reports(buy_and_hold_trace(returns, j) for j in range(returns.m))

    def grid_tables(
        self,
        returns: ReturnsSequence,
        grid: PortfolioGrid,
        config: RunConfig,
    ) -> dict[str, TableArtifact]:
        """grid.csv when a grid dump was requested."""
        if not config.dump_grid:
            return {}
        return {"grid.csv": self.path_table(grid_frame(grid, returns.asset_names()))}

    def build(self, config: RunConfig) -> ArtifactBundle:
        """Benchmarks for every requested k plus buy-and-hold rows."""
        returns, grid = self.load_inputs(config)
        tables: dict[str, TableArtifact] = {}
        reports = []
        for k in config.cycle_lengths():
            benchmark, trace = self.benchmark(returns, k, grid, config)
            reports.extend(self.reports([trace]))
            tables.update(self.benchmark_tables(returns, benchmark))
        reports.extend(self.buy_and_hold_reports(returns))
        tables.update(self.grid_tables(returns, grid, config))
        return ArtifactBundle(
            tables={"report.csv": self.report_table(report_frame(reports)), **tables}
        )
