"""k-parallel Universal Portfolio backtest with hindsight benchmarks and regret."""

import numpy as np
import structlog

from kcport.entities.artifacts import ArtifactBundle, TableArtifact, TextArtifact
from kcport.entities.benchmark import RegretSeries
from kcport.entities.portfolio import StrategyTrace
from kcport.entities.run_config import RunConfig
from kcport.settings.app_settings import AppSettings
from kcport.use_cases.computations.hindsight import (
    check_consistency,
    growth_rate_difference,
    running_best_kcc,
)
from kcport.use_cases.computations.universal import run_kpup
from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface
from kcport.use_cases.interfaces.chart_renderer_interface import ChartRendererInterface
from kcport.use_cases.interfaces.price_data_repository_interface import (
    PriceDataRepositoryInterface,
)
from kcport.use_cases.workflows.hindsight_use_case import HindsightUseCase
from kcport.use_cases.workflows.tables import regret_frame, report_frame, trace_frame

logger = structlog.get_logger(__name__)


class BacktestUseCase(HindsightUseCase):
    """Runs k-PUP for every requested k next to the best k-CC in hindsight."""

    def __init__(
        self,
        settings: AppSettings,
        artifact_store: ArtifactStoreInterface,
        price_repository: PriceDataRepositoryInterface,
        chart_renderer: ChartRendererInterface,
    ) -> None:
        """Initialize backtest use case.

        Args:
            settings: Application settings.
            artifact_store: Store receiving the artifacts.
            price_repository: Source of the return sequence.
            chart_renderer: Renderer for the optional SVG charts.
        """
        super().__init__(settings, artifact_store, price_repository)
        self.chart_renderer = chart_renderer

    def build(self, config: RunConfig) -> ArtifactBundle:
        """Traces, benchmarks, regret series and the performance table.

        report.csv lists "{k}-PUP" then "Best {k}-CC" for every k in the
        requested order, followed by one buy-and-hold row per asset.
        """
        returns, grid = self.load_inputs(config)
        workers = self.settings.worker_count
        tables: dict[str, TableArtifact] = {}
        reports = []
        traces: dict[int, StrategyTrace] = {}
        regrets: dict[int, RegretSeries] = {}
        for k in config.cycle_lengths():
            trace = run_kpup(returns, k, grid, max_workers=workers)
            benchmark, benchmark_trace = self.benchmark(returns, k, grid, config)
            regret = check_consistency(
                trace, running_best_kcc(returns, k, grid), k, config.density
            )
            traces[k], regrets[k] = trace, regret
            reports.extend(self.reports([trace, benchmark_trace]))
            tables[f"wealth_path_k{k}.csv"] = self.path_table(trace_frame(trace, returns))
            tables[f"regret_k{k}.csv"] = self.path_table(regret_frame(regret))
            tables.update(self.benchmark_tables(returns, benchmark))
            logger.info(
                "backtest_cycle_done",
                k=k,
                kpup_log_wealth=float(trace.log_wealth[-1]),
                best_kcc_log_wealth=benchmark.log_wealth,
                consistent=regret.is_consistent,
            )
        reports.extend(self.buy_and_hold_reports(returns))
        tables.update(self.grid_tables(returns, grid, config))

        texts: dict[str, TextArtifact] = {}
        if config.svg:
            reference = traces.get(1) or run_kpup(returns, 1, grid, max_workers=workers)
            texts = self.charts(traces, regrets, reference)
        return ArtifactBundle(
            tables={"report.csv": self.report_table(report_frame(reports)), **tables},
            texts=texts,
        )

    def charts(
        self,
        traces: dict[int, StrategyTrace],
        regrets: dict[int, RegretSeries],
        reference: StrategyTrace,
    ) -> dict[str, TextArtifact]:
        """Wealth paths, regret against its bound and growth differences to 1-PUP."""
        horizons = np.arange(1, reference.n + 1)
        wealth = {trace.strategy: (horizons, trace.log_wealth) for trace in traces.values()}
        regret_lines = {}
        for k, series in regrets.items():
            regret_lines[f"{k}-PUP regret"] = (series.horizons, series.regret)
            regret_lines[f"k={k} bound"] = (series.horizons, series.bound)
        differences = {
            f"{trace.strategy} - 1-PUP": (horizons, growth_rate_difference(trace, reference))
            for k, trace in traces.items()
            if k != 1
        }
        render = self.chart_renderer.render_lines
        return {
            "wealth_paths.svg": TextArtifact(
                content=render("Wealth paths", "period n", "log S_n", wealth)
            ),
            "regret_vs_bound.svg": TextArtifact(
                content=render(
                    "Growth-rate regret vs bound", "period n", "nats per period", regret_lines
                )
            ),
            "growth_difference.svg": TextArtifact(
                content=render(
                    "W_n(k-PUP) - W_n(1-PUP)", "period n", "nats per period", differences
                )
            ),
        }
