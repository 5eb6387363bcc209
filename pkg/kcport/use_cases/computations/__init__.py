"""Pure numerical operations on kcport entities."""

from kcport.use_cases.computations.accounting import (
    block_boundary_growth,
    buy_and_hold_trace,
    cyclic_constant_trace,
    growth_rate_path,
    performance_report,
    wealth_and_growth,
)
from kcport.use_cases.computations.cyclic import decompose
from kcport.use_cases.computations.hindsight import (
    best_crp,
    best_kcc,
    check_consistency,
    growth_rate_difference,
    refine_crp,
    regret_bound,
    running_best_kcc,
    subsequence_profile,
)
from kcport.use_cases.computations.kelly import (
    block_log_growth_samples,
    k_log_optimal,
    kt_certificate,
    optimal_growth_rate,
    simulate_market,
)
from kcport.use_cases.computations.simplex import generate_grid, grid_weights, weighted_grid
from kcport.use_cases.computations.universal import run_kpup, run_up, up_observe, up_portfolio

__all__ = [
    "best_crp",
    "best_kcc",
    "block_boundary_growth",
    "block_log_growth_samples",
    "buy_and_hold_trace",
    "check_consistency",
    "cyclic_constant_trace",
    "decompose",
    "generate_grid",
    "grid_weights",
    "growth_rate_difference",
    "growth_rate_path",
    "k_log_optimal",
    "kt_certificate",
    "optimal_growth_rate",
    "performance_report",
    "refine_crp",
    "regret_bound",
    "run_kpup",
    "run_up",
    "running_best_kcc",
    "simulate_market",
    "subsequence_profile",
    "up_observe",
    "up_portfolio",
    "wealth_and_growth",
    "weighted_grid",
]
