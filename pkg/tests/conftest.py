# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import os
from typing import Callable
import numpy as np
import pytest
from src.configuration import paths
from src.control.scenario_controller import ScenarioConfig
from src.control.simulation_controller import SimulationController
from src.model.dispatch_control.dispatch_engine import DispatchInputs
from src.model.resource_control.time_series import TimeSeries, ResourceSet, Quantity
from src.utility.bronze import time_utility


def scenario_path(name: str) -> str:
    return os.path.join(paths.SCENARIO_PATH, f"{name}.json")


@pytest.fixture(scope="session")
def scenario_1() -> ScenarioConfig:
    return ScenarioConfig.from_file(scenario_path("scenario_1"))


@pytest.fixture(scope="session")
def khobar_controller(scenario_1: ScenarioConfig) -> SimulationController:
    """
    Controller holding the synthesized Khobar resources and EV station load, built once per session.
    """
    controller = SimulationController(scenario_1)
    controller.prepare_resources()
    controller.prepare_load()
    return controller


@pytest.fixture(scope="session")
def khobar_inputs(khobar_controller: SimulationController) -> DispatchInputs:
    return khobar_controller.dispatch_inputs()


@pytest.fixture(scope="session")
def random_inputs() -> Callable[[int], DispatchInputs]:
    """
    Factory for noisy hourly inputs with daylight irradiance, gusty wind and a fluctuating load.
    """
    def build(seed: int) -> DispatchInputs:
        rng = np.random.default_rng(seed)
        hour_of_day = time_utility.get_hour_of_day()
        daylight = np.clip(np.sin((hour_of_day - 6) / 12 * np.pi), 0.0, None)
        ghi = daylight * rng.uniform(0.3, 1.0, time_utility.HOURS_PER_YEAR)
        wind = rng.weibull(2.0, time_utility.HOURS_PER_YEAR) * rng.uniform(3.0, 9.0)
        temperature = 25.0 + 10.0 * rng.standard_normal(time_utility.HOURS_PER_YEAR)
        load = rng.uniform(20.0, 400.0) * rng.uniform(0.2, 1.0, time_utility.HOURS_PER_YEAR)
        return DispatchInputs(ResourceSet(ghi=TimeSeries(Quantity.GHI, ghi), wind=TimeSeries(Quantity.WIND, wind),
                                          temperature=TimeSeries(Quantity.TEMPERATURE, temperature)),
                              TimeSeries(Quantity.LOAD, load))
    return build
