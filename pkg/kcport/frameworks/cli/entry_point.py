"""Command-line entry point: `kcport <subcommand> [options]`."""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

import structlog

from kcport.entities.run_config import RunConfig, Subcommand
from kcport.entities.simplex_grid import PriorDensity
from kcport.frameworks.cli.container import build_container
from kcport.frameworks.cli.error_handler import EXIT_SUCCESS, UsageError, handle_error
from kcport.frameworks.logging_config import configure_logging
from kcport.settings.app_settings import AppSettings, get_settings
from kcport.use_cases.base_use_case import BaseUseCase
from kcport.use_cases.computations.simplex import parse_step
from kcport.use_cases.workflows import (
    BacktestUseCase,
    BoundsUseCase,
    HindsightUseCase,
    ReportUseCase,
    SimulateUseCase,
)

logger = structlog.get_logger(__name__)

USE_CASES: dict[Subcommand, type[BaseUseCase]] = {
    Subcommand.BACKTEST: BacktestUseCase,
    Subcommand.HINDSIGHT: HindsightUseCase,
    Subcommand.SIMULATE: SimulateUseCase,
    Subcommand.BOUNDS: BoundsUseCase,
    Subcommand.REPORT: ReportUseCase,
}


class ArgumentParser(argparse.ArgumentParser):
    """Parser raising UsageError instead of exiting, so usage problems exit with 1."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message, self.format_usage())


def parse_k_list(value: str) -> tuple[int, ...]:
    """Comma-separated cycle lengths such as "1,2,6"."""
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError as exc:
        msg = f"expected comma-separated integers, got {value!r}"
        raise argparse.ArgumentTypeError(msg) from exc


def _add_grid_options(parser: argparse.ArgumentParser, settings: AppSettings) -> None:
    parser.add_argument(
        "--grid-step",
        help="grid pitch with integer reciprocal (default 0.025 for m=4, else 0.01)",
    )
    parser.add_argument(
        "--density",
        choices=[density.value for density in PriorDensity],
        default=settings.default_density.value,
        help="prior density over the simplex",
    )


def build_parser(settings: AppSettings) -> ArgumentParser:
    """Argument parser with one subparser per subcommand."""
    parser = ArgumentParser(
        prog="kcport",
        description="k-parallel Universal Portfolio backtests, benchmarks and Kelly simulations",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    backtest = subparsers.add_parser("backtest", help="run k-PUP against the best k-CC")
    hindsight = subparsers.add_parser("hindsight", help="best k-CC strategies only")
    for sub in (backtest, hindsight):
        sub.add_argument("--input", type=Path, required=True, help="wide price CSV")
        sub.add_argument("--k", type=parse_k_list, default=(1,), help="cycle lengths, e.g. 1,2,6")
        _add_grid_options(sub, settings)
        sub.add_argument("--refine", action="store_true", help="refine optima off the grid")
        sub.add_argument("--dump-grid", action="store_true", help="also write grid.csv")
        sub.add_argument("--out", type=Path, required=True, help="output directory")
    backtest.add_argument("--svg", action="store_true", help="also write SVG charts")

    simulate = subparsers.add_parser("simulate", help="Kelly pipeline on a simulated market")
    simulate.add_argument("--dist", type=Path, required=True, help="distribution JSON/YAML")
    simulate.add_argument("--blocks", type=int, default=1000, help="number of blocks T")
    simulate.add_argument("--seed", type=int, default=0, help="generator seed")
    simulate.add_argument(
        "--k-pup",
        type=parse_k_list,
        default=None,
        help="k-PUP cycle lengths (default: block length)",
    )
    _add_grid_options(simulate, settings)
    simulate.add_argument("--svg", action="store_true", help="also write an SVG chart")
    simulate.add_argument("--out", type=Path, required=True, help="output directory")

    bounds = subparsers.add_parser("bounds", help="print regret bound values")
    bounds.add_argument("--m", type=int, required=True, help="asset count")
    bounds.add_argument("--k", type=parse_k_list, default=(1,), help="cycle lengths")
    bounds.add_argument("--n", type=int, required=True, help="horizon")
    bounds.add_argument(
        "--density",
        choices=[density.value for density in PriorDensity],
        default=settings.default_density.value,
        help="prior density over the simplex",
    )

    report = subparsers.add_parser("report", help="merge report.csv files")
    report.add_argument("--inputs", type=Path, nargs="+", required=True, help="report.csv files")
    report.add_argument("--out", type=Path, required=True, help="output directory")
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """Validated run configuration from parsed arguments."""
    subcommand = Subcommand(args.subcommand)
    values: dict[str, Any] = {"subcommand": subcommand, "output_dir": getattr(args, "out", None)}
    if subcommand in (Subcommand.BACKTEST, Subcommand.HINDSIGHT):
        values |= {
            "input_path": args.input,
            "k_values": args.k,
            "refine": args.refine,
            "dump_grid": args.dump_grid,
            "svg": getattr(args, "svg", False),
        }
    elif subcommand is Subcommand.SIMULATE:
        values |= {
            "distribution_path": args.dist,
            "blocks": args.blocks,
            "seed": args.seed,
            "k_values": args.k_pup,
            "svg": args.svg,
        }
    elif subcommand is Subcommand.BOUNDS:
        values |= {"m": args.m, "n": args.n, "k_values": args.k}
    else:
        values |= {"report_inputs": tuple(args.inputs)}
    if getattr(args, "density", None) is not None:
        values["density"] = PriorDensity(args.density)
    if getattr(args, "grid_step", None) is not None:
        values["grid_step"] = parse_step(args.grid_step)
    return RunConfig(**values)


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one command line.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].

    Returns:
        0 on success, 1 on invalid input, 2 on runtime failure.
    """
    try:
        settings = get_settings()
        configure_logging(settings)
        args = build_parser(settings).parse_args(argv)
        config = build_config(args)
        use_case = build_container(settings)[USE_CASES[config.subcommand]]
        bundle = use_case.execute(config)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_SUCCESS
    except Exception as exc:  # noqa: BLE001
        return handle_error(exc)
    if bundle.stdout is not None:
        sys.stdout.write(f"{bundle.stdout}\n")
    return EXIT_SUCCESS


def main() -> None:
    """Console script entry point."""
    sys.exit(run())
