"""Kelly pipeline on a simulated block-wise i.i.d. market."""

import numpy as np
import pandas as pd
import structlog

from kcport.entities.artifacts import ArtifactBundle, TableArtifact, TextArtifact
from kcport.entities.errors import InputValidationError
from kcport.entities.portfolio import Portfolio, StrategyTrace
from kcport.entities.run_config import RunConfig
from kcport.settings.app_settings import AppSettings
from kcport.use_cases.base_use_case import BaseUseCase
from kcport.use_cases.computations.accounting import (
    block_boundary_growth,
    cyclic_constant_trace,
)
from kcport.use_cases.computations.kelly import (
    block_log_growth_samples,
    convergence_table,
    k_log_optimal,
    kt_certificate,
    random_tuples,
    simulate_market,
)
from kcport.use_cases.computations.simplex import weighted_grid
from kcport.use_cases.computations.universal import run_kpup
from kcport.use_cases.interfaces.artifact_store_interface import ArtifactStoreInterface
from kcport.use_cases.interfaces.chart_renderer_interface import ChartRendererInterface
from kcport.use_cases.interfaces.distribution_repository_interface import (
    DistributionRepositoryInterface,
)
from kcport.use_cases.workflows.tables import (
    convergence_frame,
    kelly_frame,
    report_frame,
    returns_frame,
    trace_frame,
)

logger = structlog.get_logger(__name__)


class SimulateUseCase(BaseUseCase):
    """Simulates a market, solves its k-log-optimal tuple and runs k-PUP on it."""

    def __init__(
        self,
        settings: AppSettings,
        artifact_store: ArtifactStoreInterface,
        distribution_repository: DistributionRepositoryInterface,
        chart_renderer: ChartRendererInterface,
    ) -> None:
        """Initialize simulate use case.

        Args:
            settings: Application settings.
            artifact_store: Store receiving the artifacts.
            distribution_repository: Source of the block distribution.
            chart_renderer: Renderer for the optional SVG chart.
        """
        super().__init__(settings, artifact_store)
        self.distribution_repository = distribution_repository
        self.chart_renderer = chart_renderer

    def build(self, config: RunConfig) -> ArtifactBundle:
        """Simulated returns, Kelly solution, k-PUP traces and convergence table.

        k-PUP cycle lengths default to the block length of the distribution.
        Growth rates are compared with the optimal rate at block boundaries.
        """
        if config.distribution_path is None:
            msg = "simulate requires distribution_path"
            raise InputValidationError(msg)
        dist = self.distribution_repository.load_distribution(config.distribution_path)
        returns = simulate_market(dist, config.blocks, config.seed)

        optimum = k_log_optimal(
            dist, tol=self.settings.refine_tol, seed_step=self.settings.seed_step
        )
        tests = [
            optimum.portfolios,
            *random_tuples(dist.k, dist.m, self.settings.kt_test_tuples, config.seed),
        ]
        certificate = kt_certificate(dist, optimum.portfolios, tests)
        kelly_trace = cyclic_constant_trace(
            returns, optimum.portfolios, strategy=f"{dist.k}-log-optimal"
        )
        samples = block_log_growth_samples(returns, optimum.portfolios)
        sigma_hat = float(np.std(samples, ddof=1)) if samples.size > 1 else 0.0
        logger.info(
            "kelly_solved",
            rate=optimum.rate,
            kt_max_expectation=certificate,
            sigma_hat=sigma_hat,
        )

        step = config.grid_step or self.settings.default_grid_step(dist.m)
        grid = weighted_grid(dist.m, step, config.density)
        traces = [kelly_trace]
        tables: dict[str, TableArtifact] = {}
        for k in config.cycle_lengths(default=dist.k):
            trace = run_kpup(returns, k, grid, max_workers=self.settings.worker_count)
            traces.append(trace)
            tables[f"trace_k{k}.csv"] = self.path_table(trace_frame(trace, returns))
        traces.append(
            cyclic_constant_trace(returns, (Portfolio.uniform(dist.m),), strategy="Uniform CRP")
        )

        convergence = pd.concat(
            [
                convergence_frame(
                    trace.strategy, convergence_table(trace, dist.k, optimum.rate, sigma_hat)
                )
                for trace in traces
            ],
            ignore_index=True,
        )
        texts: dict[str, TextArtifact] = {}
        if config.svg:
            texts["growth_convergence.svg"] = TextArtifact(
                content=self.convergence_chart(traces, dist.k, optimum.rate)
            )
        return ArtifactBundle(
            tables={
                "simulated_returns.csv": self.path_table(returns_frame(returns)),
                "kelly.csv": self.path_table(
                    kelly_frame(optimum, returns.asset_names(), certificate)
                ),
                "convergence.csv": self.path_table(convergence),
                "report.csv": self.report_table(report_frame(self.reports(traces))),
                **tables,
            },
            texts=texts,
        )

    def convergence_chart(self, traces: list[StrategyTrace], k: int, rate: float) -> str:
        """Block-boundary growth rates of every strategy against the optimal rate."""
        series = {}
        for trace in traces:
            blocks, growth = block_boundary_growth(trace, k)
            series[trace.strategy] = (blocks, growth)
        series["optimal rate"] = (blocks, np.full(blocks.shape, rate))
        return self.chart_renderer.render_lines(
            "Growth rate at block boundaries", "blocks t", "nats per period", series
        )
