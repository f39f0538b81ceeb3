# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import math
from dataclasses import dataclass
from typing import Tuple
from src.model.exceptions import ComponentSpecException, BatteryStateException


_BOUND_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BatterySpec(object):
    """
    Battery unit parameters. The bank aggregates identical units.
    Round-trip efficiency is split evenly into charge and discharge efficiency.
    """
    unit_capacity_kwh: float = 2.0
    nominal_voltage: float = 12.0
    roundtrip_eff: float = 0.97
    soc_min: float = 0.20
    soc_max: float = 1.00
    self_discharge: float = 0.0
    max_charge_rate_kw: float = 2.0
    max_discharge_rate_kw: float = 2.0

    def __post_init__(self) -> None:
        if not self.unit_capacity_kwh > 0:
            raise ComponentSpecException(
                "battery unit capacity must be positive", context=self.unit_capacity_kwh)
        if not 0 < self.roundtrip_eff <= 1:
            raise ComponentSpecException(
                "round-trip efficiency must lie in (0, 1]", context=self.roundtrip_eff)
        if not 0 <= self.soc_min < self.soc_max <= 1:
            raise ComponentSpecException(
                "SOC window must satisfy 0 <= soc_min < soc_max <= 1", context=(self.soc_min, self.soc_max))
        if not 0 <= self.self_discharge < 1:
            raise ComponentSpecException(
                "self-discharge must lie in [0, 1)", context=self.self_discharge)
        if self.max_charge_rate_kw < 0 or self.max_discharge_rate_kw < 0:
            raise ComponentSpecException("battery rate limits must be nonnegative",
                                         context=(self.max_charge_rate_kw, self.max_discharge_rate_kw))

    @property
    def one_way_eff(self) -> float:
        return math.sqrt(self.roundtrip_eff)

    def capacity_kwh(self, n_units: int) -> float:
        return n_units * self.unit_capacity_kwh

    def floor_kwh(self, n_units: int) -> float:
        return self.soc_min * self.capacity_kwh(n_units)

    def ceiling_kwh(self, n_units: int) -> float:
        return self.soc_max * self.capacity_kwh(n_units)


@dataclass(frozen=True)
class BatteryState(object):
    """
    Stored energy of the aggregated bank in kWh.
    """
    stored_energy: float

    @classmethod
    def at_soc(cls, spec: BatterySpec, n_units: int, soc: float) -> "BatteryState":
        """
        Method for creating a bank state from a state-of-charge fraction.
        :param spec: Battery parameters.
        :param n_units: Number of units.
        :param soc: State of charge as fraction of capacity.
        :return: Validated battery state.
        """
        state = cls(soc * spec.capacity_kwh(n_units))
        validate_state(spec, n_units, state)
        return state


def validate_state(spec: BatterySpec, n_units: int, state: BatteryState) -> None:
    """
    Function for validating that a state lies within the SOC window.
    :param spec: Battery parameters.
    :param n_units: Number of units.
    :param state: Bank state.
    """
    if not (spec.floor_kwh(n_units) - _BOUND_TOLERANCE <= state.stored_energy
            <= spec.ceiling_kwh(n_units) + _BOUND_TOLERANCE):
        raise BatteryStateException("battery state outside of SOC window", context={
            "stored_kwh": state.stored_energy, "floor_kwh": spec.floor_kwh(n_units),
            "ceiling_kwh": spec.ceiling_kwh(n_units)})


def _after_self_discharge(spec: BatterySpec, n_units: int, state: BatteryState, dt: float) -> float:
    stored = state.stored_energy * (1.0 - spec.self_discharge * dt)
    # Self-discharge never pushes the bank below its floor.
    return max(stored, min(state.stored_energy, spec.floor_kwh(n_units)))


def max_charge_kw(spec: BatterySpec, n_units: int, state: BatteryState, dt: float = 1.0) -> float:
    """
    Function for calculating the terminal power the bank can accept during the next step.
    :param spec: Battery parameters.
    :param n_units: Number of units.
    :param state: Bank state.
    :param dt: Step length in hours. Defaults to 1.0.
    :return: Acceptable charging power in kW.
    """
    stored = _after_self_discharge(spec, n_units, state, dt)
    headroom = max(0.0, spec.ceiling_kwh(n_units) - stored)
    return min(n_units * spec.max_charge_rate_kw, headroom / spec.one_way_eff / dt)


def max_discharge_kw(spec: BatterySpec, n_units: int, state: BatteryState, dt: float = 1.0) -> float:
    """
    Function for calculating the terminal power the bank can deliver during the next step.
    :param spec: Battery parameters.
    :param n_units: Number of units.
    :param state: Bank state.
    :param dt: Step length in hours. Defaults to 1.0.
    :return: Deliverable discharging power in kW.
    """
    stored = _after_self_discharge(spec, n_units, state, dt)
    available = max(0.0, stored - spec.floor_kwh(n_units))
    return min(n_units * spec.max_discharge_rate_kw, available * spec.one_way_eff / dt)


def battery_step(spec: BatterySpec, n_units: int, state: BatteryState, net_dc_power: float,
                 dt: float = 1.0) -> Tuple[BatteryState, float, float]:
    """
    Function for advancing the bank by one step.
    :param spec: Battery parameters.
    :param n_units: Number of units.
    :param state: Bank state within the SOC window.
    :param net_dc_power: Offered charging power (positive) or requested discharging power (negative) in kW.
    :param dt: Step length in hours. Defaults to 1.0.
    :return: Tuple of new state, accepted charging power and delivered discharging power in kW.
    """
    validate_state(spec, n_units, state)
    eff = spec.one_way_eff
    stored = _after_self_discharge(spec, n_units, state, dt)
    accepted = 0.0
    delivered = 0.0
    if net_dc_power > 0:
        headroom_kw = max(0.0, spec.ceiling_kwh(n_units) - stored) / eff / dt
        accepted = min(net_dc_power, n_units *
                       spec.max_charge_rate_kw, headroom_kw)
        if accepted >= headroom_kw:
            stored = spec.ceiling_kwh(n_units)
        else:
            stored = stored + accepted * eff * dt
    elif net_dc_power < 0:
        available_kw = max(0.0, stored - spec.floor_kwh(n_units)) * eff / dt
        delivered = min(-net_dc_power, n_units *
                        spec.max_discharge_rate_kw, available_kw)
        if delivered >= available_kw:
            stored = max(stored, spec.floor_kwh(n_units)) if available_kw == 0 else spec.floor_kwh(n_units)
        else:
            stored = stored - delivered * dt / eff
    return BatteryState(stored), accepted, delivered
