# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass, field, asdict
from typing import NamedTuple, Tuple, Optional, Callable
import numpy as np
import pandas as pd
from src.model.exceptions import DispatchException
from src.model.resource_control.time_series import TimeSeries, ResourceSet, Quantity
from src.model.component_control.pv_model import pv_power
from src.model.component_control.wind_model import hub_wind_speed, turbine_power
from src.model.component_control.battery_model import (BatteryState, battery_step, max_charge_kw,
                                                        max_discharge_kw)
from src.model.component_control.genset_model import genset_step
from src.model.component_control.converter_model import Direction, converter_flow
from src.model.dispatch_control.system_config import SystemConfig, Strategy
from src.utility.bronze import time_utility


_ZERO_TOLERANCE = 1e-9


class HourInputs(NamedTuple):
    """
    Available production and demand of one hour.
    """
    hour: int
    pv_kw: float
    wind_kw: float
    load_kw: float


class HourRecord(NamedTuple):
    """
    Energy flows of one hour in kW (equal to kWh for hourly steps).
    soc_kwh is the stored energy at the end of the hour.
    """
    hour: int
    load_kw: float
    pv_kw: float
    wind_kw: float
    genset_kw: float
    batt_charge_kw: float
    batt_discharge_kw: float
    soc_kwh: float
    unmet_kw: float
    excess_kw: float
    converter_loss_kw: float
    fuel_l: float
    genset_on: bool

    @property
    def served_kw(self) -> float:
        return self.load_kw - self.unmet_kw


HOURLY_COLUMNS = HourRecord._fields


@dataclass(frozen=True)
class DispatchAggregates(object):
    """
    Annual totals of a dispatch run.
    """
    load_kwh: float
    served_kwh: float
    unmet_kwh: float
    pv_kwh: float
    wind_kwh: float
    genset_kwh: float
    batt_charge_kwh: float
    batt_discharge_kwh: float
    excess_kwh: float
    converter_loss_kwh: float
    fuel_l: float
    genset_hours: int
    genset_starts: int
    renewable_fraction: float
    unmet_fraction: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class DispatchResult(object):
    """
    Hourly records of a simulated year and their annual aggregates.
    """
    records: Tuple[HourRecord, ...]
    strategy: Strategy
    initial_soc_kwh: float
    table: np.ndarray = field(init=False, repr=False)
    aggregates: DispatchAggregates = field(init=False)

    def __post_init__(self) -> None:
        records = tuple(HourRecord(*record) for record in self.records)
        object.__setattr__(self, "records", records)
        table = np.array(records, dtype=float).reshape(
            len(records), len(HOURLY_COLUMNS))
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "aggregates", _aggregate(table))

    def column(self, name: str) -> np.ndarray:
        """
        Method for getting one hourly column.
        :param name: Column name out of HOURLY_COLUMNS.
        :return: Column values.
        """
        return self.table[:, HOURLY_COLUMNS.index(name)]

    def to_frame(self) -> pd.DataFrame:
        """
        Method for converting the records into a data frame with columns in HOURLY_COLUMNS order.
        :return: Hourly data frame.
        """
        frame = pd.DataFrame(self.table, columns=list(HOURLY_COLUMNS))
        frame["hour"] = frame["hour"].astype(int)
        frame["genset_on"] = frame["genset_on"].astype(int)
        return frame

    def monthly_production(self) -> pd.DataFrame:
        """
        Method for aggregating production into one row per month and source.
        :return: Data frame with columns month, source, kwh.
        """
        rows = []
        for month, (start, end) in zip(time_utility.MONTH_NAMES, time_utility.get_month_slices()):
            for source, column in (("pv", "pv_kw"), ("wind", "wind_kw"), ("genset", "genset_kw")):
                rows.append({"month": month, "source": source,
                             "kwh": float(np.sum(self.column(column)[start:end]))})
        return pd.DataFrame(rows, columns=["month", "source", "kwh"])


def _aggregate(table: np.ndarray) -> DispatchAggregates:
    """
    Internal function for summing hourly columns into annual aggregates.
    :param table: Hourly table in HOURLY_COLUMNS order.
    :return: Aggregates.
    """
    def total(name: str) -> float:
        return float(np.sum(table[:, HOURLY_COLUMNS.index(name)]))

    load_kwh = total("load_kw")
    unmet_kwh = total("unmet_kw")
    served_kwh = load_kwh - unmet_kwh
    genset_kwh = total("genset_kw")
    running = table[:, HOURLY_COLUMNS.index("genset_on")] > 0
    starts = int(np.sum(running[1:] & ~running[:-1])) + int(running[0]) if len(running) else 0
    renewable_fraction = 0.0 if served_kwh <= 0 else float(
        np.clip(1.0 - genset_kwh / served_kwh, 0.0, 1.0))
    return DispatchAggregates(
        load_kwh=load_kwh,
        served_kwh=served_kwh,
        unmet_kwh=unmet_kwh,
        pv_kwh=total("pv_kw"),
        wind_kwh=total("wind_kw"),
        genset_kwh=genset_kwh,
        batt_charge_kwh=total("batt_charge_kw"),
        batt_discharge_kwh=total("batt_discharge_kw"),
        excess_kwh=total("excess_kw"),
        converter_loss_kwh=total("converter_loss_kw"),
        fuel_l=total("fuel_l"),
        genset_hours=int(np.sum(running)),
        genset_starts=starts,
        renewable_fraction=renewable_fraction,
        unmet_fraction=unmet_kwh / load_kwh if load_kwh > 0 else 0.0
    )


def _balance_hour(config: SystemConfig, state: BatteryState, inputs: HourInputs, genset_kw: float,
                  fuel_l: float, genset_on: bool) -> HourRecord:
    """
    Internal function for settling the buses of one hour for a fixed genset output.
    AC deficit is covered through the inverter by PV first and the battery second, leftover PV charges the battery.
    AC surplus charges the battery through the rectifier after PV has charged it directly.
    :param config: System configuration.
    :param state: Battery state at the start of the hour.
    :param inputs: Hour inputs.
    :param genset_kw: Genset output in kW.
    :param fuel_l: Genset fuel consumption in L.
    :param genset_on: Genset running flag.
    :return: Hour record.
    """
    converter = config.converter
    eff = converter.efficiency
    pv = inputs.pv_kw
    net_ac = inputs.load_kw - inputs.wind_kw - genset_kw
    unmet = 0.0
    if net_ac > 0:
        inverter_in = min(net_ac / eff, converter.rated_kw)
        pv_in = min(pv, inverter_in)
        battery_request = inverter_in - pv_in
        pv_left = pv - pv_in
        if battery_request > 0:
            state, accepted, delivered = battery_step(
                config.battery, config.n_batt, state, -battery_request)
        else:
            state, accepted, delivered = battery_step(
                config.battery, config.n_batt, state, pv_left)
        inverter_in = pv_in + delivered
        inverter_out = converter_flow(
            converter, Direction.DC_TO_AC, inverter_in)
        unmet = net_ac - inverter_out
        if unmet < _ZERO_TOLERANCE:
            unmet = 0.0
        excess = pv_left - accepted
        loss = inverter_in - inverter_out
    else:
        ac_surplus = -net_ac
        room = max_charge_kw(config.battery, config.n_batt, state)
        pv_to_battery = min(pv, room)
        rectifier_in = min(ac_surplus, converter.rated_kw,
                           max(0.0, room - pv_to_battery) / eff)
        rectifier_out = converter_flow(
            converter, Direction.AC_TO_DC, rectifier_in)
        state, accepted, delivered = battery_step(
            config.battery, config.n_batt, state, pv_to_battery + rectifier_out)
        excess = (pv + rectifier_out - accepted) + (ac_surplus - rectifier_in)
        loss = rectifier_in - rectifier_out
    return HourRecord(
        hour=inputs.hour,
        load_kw=inputs.load_kw,
        pv_kw=pv,
        wind_kw=inputs.wind_kw,
        genset_kw=genset_kw,
        batt_charge_kw=accepted,
        batt_discharge_kw=delivered,
        soc_kwh=state.stored_energy,
        unmet_kw=unmet,
        excess_kw=excess,
        converter_loss_kw=loss,
        fuel_l=fuel_l,
        genset_on=genset_on
    )


def _genset_need(config: SystemConfig, state: BatteryState, inputs: HourInputs) -> float:
    """
    Internal function for the AC deficit left after renewables and the battery discharging at its limit.
    :param config: System configuration.
    :param state: Battery state at the start of the hour.
    :param inputs: Hour inputs.
    :return: Deficit in kW, zero or below if the genset can stay off.
    """
    dc_available = inputs.pv_kw + \
        max_discharge_kw(config.battery, config.n_batt, state)
    ac_from_dc = converter_flow(
        config.converter, Direction.DC_TO_AC, dc_available)
    return inputs.load_kw - inputs.wind_kw - ac_from_dc


def step_load_following(config: SystemConfig, state: BatteryState, inputs: HourInputs) -> HourRecord:
    """
    Function for dispatching one hour under load following.
    The genset produces only the deficit left after renewables and battery, raised to its minimum load.
    :param config: System configuration.
    :param state: Battery state at the start of the hour.
    :param inputs: Hour inputs.
    :return: Hour record.
    """
    genset = config.genset
    need = _genset_need(config, state, inputs)
    if genset is None or need <= _ZERO_TOLERANCE:
        return _balance_hour(config, state, inputs, 0.0, 0.0, False)
    output, fuel, running = genset_step(genset, need)
    return _balance_hour(config, state, inputs, output, fuel, running)


def step_cycle_charging(config: SystemConfig, state: BatteryState, inputs: HourInputs) -> HourRecord:
    """
    Function for dispatching one hour under cycle charging.
    Whenever the genset has to run it runs at rated power, limited to what the load and the battery
    can absorb and never below its minimum load; the surplus charges the battery.
    PV keeps priority: it charges the bank up to its headroom and serves the AC load with the rest.
    With a full bank the genset covers only the deficit left after renewables and battery discharge.
    :param config: System configuration.
    :param state: Battery state at the start of the hour.
    :param inputs: Hour inputs.
    :return: Hour record.
    """
    genset = config.genset
    need = _genset_need(config, state, inputs)
    if genset is None or need <= _ZERO_TOLERANCE:
        return _balance_hour(config, state, inputs, 0.0, 0.0, False)
    absorbable = _cycle_charging_absorbable(config, state, inputs)
    output, fuel, running = genset_step(
        genset, min(genset.rated_kw, max(absorbable, need)))
    return _balance_hour(config, state, inputs, output, fuel, running)


def _cycle_charging_absorbable(config: SystemConfig, state: BatteryState, inputs: HourInputs) -> float:
    """
    Internal function for the AC power the load and the battery can absorb from a genset running hard.
    :param config: System configuration.
    :param state: Battery state at the start of the hour.
    :param inputs: Hour inputs.
    :return: Absorbable AC power in kW, zero if the bank cannot take any charge.
    """
    converter = config.converter
    room = max_charge_kw(config.battery, config.n_batt, state)
    if room <= _ZERO_TOLERANCE:
        return 0.0
    pv_to_battery = min(inputs.pv_kw, room)
    ac_deficit = max(0.0, inputs.load_kw - inputs.wind_kw)
    pv_to_load = converter_flow(converter, Direction.DC_TO_AC,
                                min(inputs.pv_kw - pv_to_battery, ac_deficit / converter.efficiency))
    rectifier_in = min(converter.rated_kw, (room - pv_to_battery) / converter.efficiency)
    return ac_deficit - pv_to_load + rectifier_in


STEP_FUNCTIONS = {
    Strategy.LOAD_FOLLOWING: step_load_following,
    Strategy.CYCLE_CHARGING: step_cycle_charging
}


def _check_series(series: TimeSeries, quantity: Quantity) -> np.ndarray:
    values = np.asarray(getattr(series, "values", series), dtype=float)
    if values.shape != (time_utility.HOURS_PER_YEAR,):
        raise DispatchException(f"series length mismatch, expected {time_utility.HOURS_PER_YEAR} hourly values",
                                context={"quantity": quantity.value, "length": int(values.size)})
    if getattr(series, "quantity", quantity) is not quantity:
        raise DispatchException(
            "series quantity mismatch", context={"expected": quantity.value, "got": series.quantity.value})
    return values


def production_profiles(config: SystemConfig, resources: ResourceSet) -> Tuple[np.ndarray, np.ndarray]:
    """
    Function for converting site resources into the available PV (DC) and wind (AC) output of a fleet.
    :param config: System configuration.
    :param resources: Hourly resources.
    :return: Tuple of PV and wind output arrays in kW.
    """
    ghi = _check_series(resources.ghi, Quantity.GHI)
    wind = _check_series(resources.wind, Quantity.WIND)
    temperature = _check_series(resources.temperature, Quantity.TEMPERATURE)
    pv_kw = pv_power(config.pv, config.n_pv, ghi, temperature)
    u_hub = hub_wind_speed(wind, config.wind.anemometer_height_m,
                           config.wind.hub_height_m, config.wind.shear_exponent)
    wind_kw = turbine_power(config.wind, config.n_wt, u_hub)
    return np.asarray(pv_kw, dtype=float), np.asarray(wind_kw, dtype=float)


def initial_state(config: SystemConfig, initial_soc: Optional[float] = None) -> BatteryState:
    """
    Function for creating the battery state at hour 0.
    :param config: System configuration.
    :param initial_soc: State of charge fraction. Defaults to None in which case soc_max is used.
    :return: Battery state.
    """
    spec = config.battery
    soc = spec.soc_max if initial_soc is None else initial_soc
    if not spec.soc_min <= soc <= spec.soc_max:
        raise DispatchException("invalid initial SOC, must lie within the SOC window",
                                context={"initial_soc": soc, "soc_min": spec.soc_min, "soc_max": spec.soc_max})
    return BatteryState.at_soc(spec, config.n_batt, soc)


def simulate_year(config: SystemConfig, resources: ResourceSet, load: TimeSeries,
                  initial_soc: Optional[float] = None) -> DispatchResult:
    """
    Function for simulating one year of hourly dispatch.
    :param config: System configuration, its strategy selects the step function.
    :param resources: Hourly irradiance, wind speed and temperature.
    :param load: Hourly load.
    :param initial_soc: Battery state of charge at hour 0. Defaults to None in which case soc_max is used.
    :return: Dispatch result.
    """
    load_kw = _check_series(load, Quantity.LOAD)
    pv_kw, wind_kw = production_profiles(config, resources)
    state = initial_state(config, initial_soc)
    start = state.stored_energy
    step: Callable = STEP_FUNCTIONS[config.strategy]
    records = []
    for hour, (pv, wind, demand) in enumerate(zip(pv_kw.tolist(), wind_kw.tolist(), load_kw.tolist())):
        record = step(config, state, HourInputs(hour, pv, wind, demand))
        records.append(record)
        state = BatteryState(record.soc_kwh)
    return DispatchResult(tuple(records), config.strategy, start)


def energy_balance_residuals(result: DispatchResult) -> np.ndarray:
    """
    Function for calculating the hourly balance residual:
    production + battery discharge - (served load + battery charge + excess + converter loss).
    :param result: Dispatch result.
    :return: Residuals in kW per hour.
    """
    sources = result.column("pv_kw") + result.column("wind_kw") + \
        result.column("genset_kw") + result.column("batt_discharge_kw")
    served = result.column("load_kw") - result.column("unmet_kw")
    sinks = served + result.column("batt_charge_kw") + \
        result.column("excess_kw") + result.column("converter_loss_kw")
    return sources - sinks


def verify_energy_balance(result: DispatchResult) -> float:
    """
    Function for verifying the hourly energy balance of a dispatch result.
    :param result: Dispatch result.
    :return: Maximum absolute residual in kW, zero for an empty result.
    """
    residuals = energy_balance_residuals(result)
    return float(np.max(np.abs(residuals))) if residuals.size else 0.0


def replay_soc(result: DispatchResult, config: SystemConfig) -> np.ndarray:
    """
    Function for re-deriving the SOC trace by feeding the recorded battery flows through battery_step.
    :param result: Dispatch result.
    :param config: System configuration the result was simulated with.
    :return: End-of-hour stored energy in kWh.
    """
    state = BatteryState(result.initial_soc_kwh)
    trace = []
    for record in result.records:
        net = record.batt_charge_kw if record.batt_charge_kw > 0 else -record.batt_discharge_kw
        state, _, _ = battery_step(config.battery, config.n_batt, state, net)
        trace.append(state.stored_energy)
    return np.array(trace, dtype=float)


@dataclass(frozen=True)
class DispatchInputs(object):
    """
    Site inputs shared by all candidate simulations.
    """
    resources: ResourceSet
    load: TimeSeries
    initial_soc: Optional[float] = None

    def simulate(self, config: SystemConfig) -> DispatchResult:
        return simulate_year(config, self.resources, self.load, self.initial_soc)

