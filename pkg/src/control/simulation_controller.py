# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import logging
from dataclasses import dataclass
from typing import Dict
import numpy as np
import requests
from src.control.scenario_controller import ScenarioConfig
from src.model.exceptions import ConfigurationException
from src.model.resource_control.time_series import (TimeSeries, ResourceSet, Quantity, DailyShape, LoadStats,
                                                    load_daily_shapes, load_monthly_profiles, parse_hourly_csv,
                                                    scale_to_mean, load_stats)
from src.model.resource_control.synthesis import synthesize_from_monthly, synthesize_load
from src.model.resource_control.nasa_power import fetch_nasa_monthly
from src.model.dispatch_control.system_config import SystemConfig, Strategy
from src.model.dispatch_control.dispatch_engine import (DispatchInputs, DispatchResult, simulate_year,
                                                         verify_energy_balance, replay_soc)
from src.model.economics_control.costing import EconomicSummary, system_summary, baseline_grid
from src.model.emissions_control.emissions import EmissionsReport, genset_emissions, grid_emissions
from src.model.optimization_control.optimizer import EvaluationInputs, RankedResult, optimize, local_search
from src.utility.bronze import time_utility
from src.utility.silver import file_system_utility


# Offsets keep the synthesized series independent of each other for one scenario seed.
SEED_OFFSETS = {Quantity.GHI: 0, Quantity.WIND: 1, Quantity.TEMPERATURE: 2, Quantity.LOAD: 3}


@dataclass(frozen=True)
class BaselineOutcome(object):
    header: dict
    load_stats: LoadStats
    summary: EconomicSummary
    emissions: EmissionsReport
    tariff: float


@dataclass(frozen=True)
class SimulationOutcome(object):
    header: dict
    config: SystemConfig
    dispatch: DispatchResult
    summary: EconomicSummary
    emissions: EmissionsReport
    max_balance_residual_kw: float
    soc_replay_identical: bool


@dataclass(frozen=True)
class OptimizationOutcome(object):
    header: dict
    method: str
    ranked: RankedResult


@dataclass(frozen=True)
class SynthesisOutcome(object):
    header: dict
    series: Dict[str, TimeSeries]


class SimulationController(object):
    """
    Class, representing Simulation Controller objects.
    The controller prepares hourly inputs of a scenario once and runs the commands on them.
    """

    def __init__(self, scenario: ScenarioConfig, seed: int = None, strategy: str = None, allow_network: bool = False,
                 session: requests.Session = None) -> None:
        """
        Initiation method for Simulation Controller objects.
        :param scenario: Validated scenario.
        :param seed: Seed override. Defaults to None in which case the scenario seed is used.
        :param strategy: Strategy override. Defaults to None in which case the scenario strategy is used.
        :param allow_network: Flag, declaring whether network access is enabled. Defaults to False.
        :param session: Requests session for NASA POWER access. Defaults to None.
        """
        self._logger = logging.getLogger("HybridSizer.SimulationController")
        self._logger.info("initiating ...")
        self.scenario = scenario
        self.seed = scenario.seed if seed is None else int(seed)
        if self.seed < 0:
            raise ConfigurationException("seed", "must be >= 0")
        self.strategy = Strategy(strategy or scenario.get("dispatch.strategy"))
        self.allow_network = allow_network
        self.session = session
        self._shapes = None
        self._resources = None
        self._load = None

    def header(self, command: str) -> dict:
        """
        Method for building the report header.
        :param command: Command name.
        :return: Header dictionary.
        """
        return {
            "tool": "hybrid-sizer",
            "command": command,
            "scenario": self.scenario.get("name"),
            "seed": self.seed,
            "strategy": self.strategy.value,
            "config_sha256": self.scenario.digest()
        }

    def _shape(self, field: str) -> DailyShape:
        if self._shapes is None:
            self._shapes = load_daily_shapes(self.scenario.resolve("resources.shapes"))
        name = self.scenario.get(field)
        if name not in self._shapes:
            raise ConfigurationException(field, f"unknown daily shape '{name}', available: {sorted(self._shapes)}")
        return self._shapes[name]

    def _read_series(self, field: str, quantity: Quantity) -> TimeSeries:
        return parse_hourly_csv(file_system_utility.read_text(self.scenario.resolve(field)), quantity)

    def prepare_resources(self) -> ResourceSet:
        """
        Method for preparing hourly resources from CSV files, shipped climatology or NASA POWER.
        :return: Resource set.
        """
        if self._resources is not None:
            return self._resources
        source = self.scenario.get("resources.source")
        self._logger.info(f"preparing resources from '{source}' ...")
        if source == "csv":
            self._resources = ResourceSet(ghi=self._read_series("resources.ghi_csv", Quantity.GHI),
                                          wind=self._read_series("resources.wind_csv", Quantity.WIND),
                                          temperature=self._read_series("resources.temperature_csv",
                                                                        Quantity.TEMPERATURE))
            return self._resources
        if source == "nasa":
            profiles = fetch_nasa_monthly(self.scenario.get("site.latitude"), self.scenario.get("site.longitude"),
                                          allow_network=self.allow_network, session=self.session)
        else:
            profiles = load_monthly_profiles(self.scenario.resolve("resources.profile"))
        series = {}
        for quantity, prefix in ((Quantity.GHI, "ghi"), (Quantity.WIND, "wind"),
                                 (Quantity.TEMPERATURE, "temperature")):
            series[quantity] = synthesize_from_monthly(profiles[quantity], self._shape(f"resources.{prefix}_shape"),
                                                       self.scenario.get(f"resources.{prefix}_day_variability"),
                                                       self.seed + SEED_OFFSETS[quantity])
        ghi_target = self.scenario.get("resources.ghi_annual_kwh_m2_day")
        if ghi_target is not None:
            series[Quantity.GHI] = scale_to_mean(series[Quantity.GHI], ghi_target / time_utility.HOURS_PER_DAY)
        wind_target = self.scenario.get("resources.wind_annual_ms")
        if wind_target is not None:
            series[Quantity.WIND] = scale_to_mean(series[Quantity.WIND], wind_target)
        self._resources = ResourceSet(ghi=series[Quantity.GHI], wind=series[Quantity.WIND],
                                      temperature=series[Quantity.TEMPERATURE])
        return self._resources

    def prepare_load(self) -> TimeSeries:
        """
        Method for preparing the hourly load.
        :return: Load series.
        """
        if self._load is not None:
            return self._load
        self._logger.info("preparing load ...")
        if self.scenario.get("load.source") == "csv":
            self._load = self._read_series("load.csv", Quantity.LOAD)
        else:
            self._load = synthesize_load(self.scenario.get("load.avg_daily_kwh"), self.scenario.get("load.peak_kw"),
                                         self._shape("load.shape"), self.seed + SEED_OFFSETS[Quantity.LOAD],
                                         day_variability=self.scenario.get("load.day_variability"),
                                         monthly_factors=self.scenario.get("load.monthly_factors"))
        return self._load

    def dispatch_inputs(self) -> DispatchInputs:
        return DispatchInputs(self.prepare_resources(), self.prepare_load(), self.scenario.initial_soc)

    def run_baseline(self) -> BaselineOutcome:
        """
        Method for costing the grid-only supply of the scenario load.
        :return: Baseline outcome.
        """
        load = self.prepare_load()
        tariff = float(self.scenario.get("grid.tariff"))
        self._logger.info(f"costing grid baseline at {tariff} $/kWh ...")
        summary = baseline_grid(load, tariff, self.scenario.finance())
        emissions = grid_emissions(summary.served_kwh, self.scenario.emission_factors())
        return BaselineOutcome(self.header("baseline"), load_stats(load), summary, emissions, tariff)

    def run_simulation(self) -> SimulationOutcome:
        """
        Method for simulating and costing the scenario fleet.
        :return: Simulation outcome.
        """
        config = self.scenario.system_config(self.strategy)
        inputs = self.dispatch_inputs()
        self._logger.info(f"simulating fleet {config.sizing_key()} with strategy '{self.strategy.value}' ...")
        result = simulate_year(config, inputs.resources, inputs.load, inputs.initial_soc)
        summary = system_summary(config, result, self.scenario.prices(), self.scenario.finance())
        emissions = genset_emissions(result.aggregates.fuel_l, self.scenario.emission_factors())
        residual = verify_energy_balance(result)
        replay_identical = bool(np.array_equal(replay_soc(result, config), result.column("soc_kwh")))
        return SimulationOutcome(self.header("simulate"), config, result, summary, emissions, residual,
                                 replay_identical)

    def run_optimization(self, workers: int = None, method: str = None, progress: bool = True) -> OptimizationOutcome:
        """
        Method for searching the scenario's search space.
        :param workers: Worker count override. Defaults to None in which case the scenario setting is used.
        :param method: Search method override, "exhaustive" or "local". Defaults to None.
        :param progress: Flag, declaring whether to show a progress bar. Defaults to True.
        :return: Optimization outcome.
        """
        method = method or self.scenario.get("search_space.method")
        workers = workers or self.scenario.get("search_space.workers")
        space = self.scenario.search_space()
        base = self.scenario.system_config(self.strategy)
        inputs = EvaluationInputs(self.dispatch_inputs(), self.scenario.prices(), self.scenario.finance())
        constraints = self.scenario.constraints()
        self._logger.info(f"searching {space.size} candidates ({method}) ...")
        if method == "local":
            ranked = local_search(space, inputs, constraints, base)
        else:
            ranked = optimize(space, inputs, constraints, base, workers=workers, progress=progress)
        return OptimizationOutcome(self.header("optimize"), method, ranked)

    def run_synthesis(self) -> SynthesisOutcome:
        """
        Method for producing the hourly input series of the scenario.
        :return: Synthesis outcome.
        """
        resources = self.prepare_resources()
        return SynthesisOutcome(self.header("synth"), {
            "ghi": resources.ghi, "wind": resources.wind, "temperature": resources.temperature,
            "load": self.prepare_load()})
