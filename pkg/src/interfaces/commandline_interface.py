# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import json
import logging
import sys
from typing import Callable, Optional
import click
from src.configuration import configuration as cfg
from src.control.scenario_controller import load_scenario
from src.control.simulation_controller import SimulationController
from src.control.report_controller import write_reports
from src.model.exceptions import HybridSizerException, ConfigurationException, NoFeasibleCandidateException
from src.model.optimization_control.optimizer import STATUS_NO_FEASIBLE
from src.utility.bronze.requests_utility import get_session


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_CONFIGURATION = 2
EXIT_NO_FEASIBLE = 3


def exit_code_of(exception: BaseException) -> int:
    """
    Function for mapping an exception to the process exit code.
    :param exception: Raised exception.
    :return: Exit code.
    """
    if isinstance(exception, ConfigurationException):
        return EXIT_CONFIGURATION
    if isinstance(exception, NoFeasibleCandidateException):
        return EXIT_NO_FEASIBLE
    return EXIT_FAILURE


def format_error(exception: BaseException) -> str:
    """
    Function for rendering an exception as a single machine-parsable line.
    :param exception: Raised exception.
    :return: Error record.
    """
    field = getattr(exception, "field", None) or getattr(exception, "dimension", None) or \
        getattr(exception, "path", None) or "-"
    message = getattr(exception, "message", None) or str(exception)
    return f"error={type(exception).__name__} field={field} message={json.dumps(str(message))}"


def _run(command: Callable[[], Optional[int]]) -> None:
    """
    Internal function for running a command and turning failures into an error record and exit code.
    :param command: Command body, returning an exit code or None for success.
    """
    try:
        code = command()
    except (HybridSizerException, OSError) as ex:
        cfg.LOGGER.debug("command failed", exc_info=True)
        click.echo(format_error(ex), err=True)
        sys.exit(exit_code_of(ex))
    sys.exit(code or EXIT_SUCCESS)


def _controller(config: str, seed: Optional[int], strategy: Optional[str],
                allow_network: bool = False) -> SimulationController:
    scenario = load_scenario(config)
    return SimulationController(scenario, seed=seed, strategy=strategy, allow_network=allow_network,
                                session=get_session() if allow_network else None)


config_option = click.option("--config", "config", required=True, type=click.Path(dir_okay=False),
                             help="Scenario JSON file.")
out_option = click.option("--out", "out", type=click.Path(file_okay=False), default=None,
                          help="Output directory, overrides HYBRID_SIZER_OUTPUT_DIR and the scenario setting.")
seed_option = click.option("--seed", "seed", type=click.IntRange(min=0), default=None,
                           help="Seed for synthesized series, overrides the scenario seed.")
strategy_option = click.option("--strategy", "strategy", type=click.Choice(["lf", "cc"]), default=None,
                               help="Dispatch strategy: load following or cycle charging.")
network_option = click.option("--allow-network", "allow_network", is_flag=True, default=False,
                              help="Allow fetching monthly climatology from NASA POWER.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--log-level", "log_level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"],
                                                            case_sensitive=False), default=None,
              help="Overrides LOG_LEVEL.")
def cli(log_level: Optional[str]) -> None:
    """
    Hybrid PV/wind/battery/diesel microgrid simulator and sizing optimizer.
    """
    if log_level:
        cfg.LOGGER.setLevel(getattr(logging, log_level.upper()))


@cli.command()
@config_option
@out_option
@seed_option
@network_option
def baseline(config: str, out: Optional[str], seed: Optional[int], allow_network: bool) -> None:
    """
    Cost and emissions of supplying the scenario load from the grid.
    """
    def command() -> None:
        controller = _controller(config, seed, None, allow_network)
        write_reports(controller.run_baseline(), controller.scenario.output_directory(out))
    _run(command)


@cli.command()
@config_option
@out_option
@seed_option
@strategy_option
@network_option
def simulate(config: str, out: Optional[str], seed: Optional[int], strategy: Optional[str],
             allow_network: bool) -> None:
    """
    Hourly dispatch, economics and emissions of the scenario fleet.
    """
    def command() -> None:
        controller = _controller(config, seed, strategy, allow_network)
        write_reports(controller.run_simulation(), controller.scenario.output_directory(out))
    _run(command)


@cli.command()
@config_option
@out_option
@seed_option
@strategy_option
@network_option
@click.option("--workers", "workers", type=click.IntRange(min=1), default=None,
              help="Number of worker processes for candidate evaluation.")
@click.option("--search", "search", type=click.Choice(["exhaustive", "local"]), default=None,
              help="Search method, overrides the scenario setting.")
@click.option("--no-progress", "no_progress", is_flag=True, default=False, help="Hide the progress bar.")
def optimize(config: str, out: Optional[str], seed: Optional[int], strategy: Optional[str], allow_network: bool,
             workers: Optional[int], search: Optional[str], no_progress: bool) -> None:
    """
    Ranking of the feasible candidates of the scenario search space by net present cost.
    """
    def command() -> Optional[int]:
        controller = _controller(config, seed, strategy, allow_network)
        outcome = controller.run_optimization(workers=workers, method=search, progress=not no_progress)
        write_reports(outcome, controller.scenario.output_directory(out))
        if outcome.ranked.status == STATUS_NO_FEASIBLE:
            raise NoFeasibleCandidateException(outcome.ranked.binding_statistics())
        return None
    _run(command)


@cli.command()
@config_option
@out_option
@seed_option
@network_option
def synth(config: str, out: Optional[str], seed: Optional[int], allow_network: bool) -> None:
    """
    Hourly resource and load series synthesized from the scenario's monthly inputs.
    """
    def command() -> None:
        controller = _controller(config, seed, None, allow_network)
        write_reports(controller.run_synthesis(), controller.scenario.output_directory(out))
    _run(command)
