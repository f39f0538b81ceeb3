# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import numpy as np
import pytest
from src.model.exceptions import DispatchException
from src.model.component_control.genset_model import GensetSpec
from src.model.component_control.battery_model import BatterySpec, BatteryState
from src.model.dispatch_control.system_config import SystemConfig, Strategy
from src.model.dispatch_control.dispatch_engine import (HOURLY_COLUMNS, HourInputs, DispatchResult, simulate_year,
                                                         step_load_following, step_cycle_charging,
                                                         verify_energy_balance, energy_balance_residuals,
                                                         replay_soc)
from src.model.economics_control.costing import ComponentPrices, UnitPrice, system_summary
from src.model.economics_control.finance import FinanceSpec
from src.model.resource_control.time_series import TimeSeries, Quantity


SCENARIO_1_FLEET = dict(n_pv=714, n_wt=67, n_batt=1059, genset_kw=490.0, converter_kw=331.0)
SCENARIO_4_FLEET = dict(n_pv=2867, n_wt=0, n_batt=1936, genset_kw=0.0, converter_kw=456.0)
# Battery prices implied by the published cost tables.
TABLE_PRICES = ComponentPrices(battery=UnitPrice(100.0, 100.0, 1.0, 5))
NO_FIXED_FUEL = GensetSpec(rated_kw=1.0, min_load_ratio=0.0, fuel_intercept=0.0)


def random_config(rng: np.random.Generator, with_genset: bool = None, **overrides) -> SystemConfig:
    with_genset = bool(rng.integers(0, 2)) if with_genset is None else with_genset
    sizing = dict(n_pv=int(rng.integers(0, 600)), n_wt=int(rng.integers(0, 60)), n_batt=int(rng.integers(0, 800)),
                  genset_kw=float(rng.uniform(50.0, 500.0)) if with_genset else 0.0,
                  converter_kw=float(rng.uniform(0.0, 400.0)),
                  strategy=Strategy.CYCLE_CHARGING if rng.integers(0, 2) else Strategy.LOAD_FOLLOWING)
    sizing.update(overrides)
    return SystemConfig(**sizing)


def test_energy_balance_over_randomized_configurations(random_inputs):
    rng = np.random.default_rng(2024)
    for draw in range(100):
        inputs = random_inputs(int(rng.integers(0, 2 ** 31)))
        config = random_config(rng)
        result = inputs.simulate(config)
        assert verify_energy_balance(result) < 1e-6, (draw, config.sizing_key())


def test_hourly_flows_are_physical(random_inputs):
    rng = np.random.default_rng(11)
    config = random_config(rng, with_genset=True, strategy=Strategy.LOAD_FOLLOWING)
    result = random_inputs(3).simulate(config)
    frame = result.to_frame()
    assert list(frame.columns) == list(HOURLY_COLUMNS)
    assert (frame.drop(columns=["hour"]) >= -1e-12).all().all()
    assert ((frame["batt_charge_kw"] * frame["batt_discharge_kw"]) == 0).all()
    soc = result.column("soc_kwh")
    assert np.all(soc >= config.battery.floor_kwh(config.n_batt) - 1e-9)
    assert np.all(soc <= config.battery.ceiling_kwh(config.n_batt) + 1e-9)
    assert np.all(frame.loc[frame["genset_on"] == 0, "fuel_l"] == 0)


def test_soc_replay_is_identical(random_inputs):
    rng = np.random.default_rng(5)
    for _ in range(5):
        config = random_config(rng, battery=BatterySpec(self_discharge=0.0002))
        result = random_inputs(int(rng.integers(0, 1000))).simulate(config)
        assert np.array_equal(replay_soc(result, config), result.column("soc_kwh"))


def test_load_following_burns_no_more_fuel_than_cycle_charging(random_inputs):
    rng = np.random.default_rng(99)
    for _ in range(20):
        inputs = random_inputs(int(rng.integers(0, 1000)))
        base = random_config(rng, with_genset=True, genset_template=NO_FIXED_FUEL)
        lf = inputs.simulate(base.resized(strategy=Strategy.LOAD_FOLLOWING)).aggregates
        cc = inputs.simulate(base.resized(strategy=Strategy.CYCLE_CHARGING)).aggregates
        assert lf.fuel_l <= cc.fuel_l + 1e-6


def test_more_pv_never_burns_more_fuel(random_inputs):
    rng = np.random.default_rng(17)
    inputs = random_inputs(8)
    for _ in range(5):
        config = random_config(rng, with_genset=True, genset_template=NO_FIXED_FUEL, strategy=Strategy.LOAD_FOLLOWING)
        bigger = config.resized(n_pv=config.n_pv + 200)
        assert inputs.simulate(bigger).aggregates.fuel_l <= inputs.simulate(config).aggregates.fuel_l + 1e-6


def test_genset_only_system_serves_load_without_renewables(random_inputs):
    inputs = random_inputs(1)
    peak = float(np.max(inputs.load.values))
    result = inputs.simulate(SystemConfig(genset_kw=peak + 1.0))
    aggregates = result.aggregates
    assert aggregates.unmet_kwh == 0.0
    assert aggregates.renewable_fraction == 0.0
    assert aggregates.genset_hours == int(np.sum(inputs.load.values > 1e-9))


def test_empty_system_serves_nothing(random_inputs):
    aggregates = random_inputs(2).simulate(SystemConfig()).aggregates
    assert aggregates.served_kwh == pytest.approx(0.0, abs=1e-9)
    assert aggregates.unmet_fraction == pytest.approx(1.0)
    assert aggregates.renewable_fraction == 0.0


def test_simulate_year_rejects_bad_inputs(random_inputs):
    inputs = random_inputs(4)
    with pytest.raises(DispatchException):
        simulate_year(SystemConfig(n_batt=10), inputs.resources, inputs.load, initial_soc=0.1)
    with pytest.raises(DispatchException):
        simulate_year(SystemConfig(), inputs.resources, TimeSeries(Quantity.WIND, inputs.load.values))


def test_monthly_production_rows(khobar_inputs):
    result = khobar_inputs.simulate(SystemConfig(**SCENARIO_1_FLEET))
    monthly = result.monthly_production()
    assert len(monthly) == 36
    assert monthly["kwh"].sum() == pytest.approx(result.aggregates.pv_kwh + result.aggregates.wind_kwh +
                                                 result.aggregates.genset_kwh)


def test_scenario_1_fleet_on_khobar_resources(khobar_inputs):
    config = SystemConfig(**SCENARIO_1_FLEET)
    result = khobar_inputs.simulate(config)
    aggregates = result.aggregates
    assert aggregates.renewable_fraction >= 0.90
    assert aggregates.unmet_fraction <= 0.001
    assert verify_energy_balance(result) < 1e-6
    summary = system_summary(config, result, TABLE_PRICES, FinanceSpec())
    assert summary.lcoe == pytest.approx(0.0955, rel=0.15)


def test_scenario_4_fleet_runs_without_fuel(khobar_inputs):
    result = khobar_inputs.simulate(SystemConfig(**SCENARIO_4_FLEET))
    aggregates = result.aggregates
    assert aggregates.fuel_l == 0.0
    assert aggregates.genset_kwh == 0.0
    assert aggregates.served_kwh > 0
    assert aggregates.renewable_fraction == 1.0


def settle(record) -> float:
    return verify_energy_balance(DispatchResult((record,), Strategy.LOAD_FOLLOWING, 0.0))


def run_hours(config: SystemConfig, state: BatteryState, hours: list) -> float:
    step = step_cycle_charging if config.strategy is Strategy.CYCLE_CHARGING else step_load_following
    fuel = 0.0
    for inputs in hours:
        record = step(config, state, inputs)
        state = BatteryState(record.soc_kwh)
        fuel += record.fuel_l
    return fuel


def test_load_following_hour_priorities():
    config = SystemConfig(n_batt=10, genset_kw=50.0, converter_kw=100.0)
    half_full = BatteryState.at_soc(config.battery, 10, 0.5)
    surplus = step_load_following(config, half_full, HourInputs(0, 50.0, 0.0, 20.0))
    assert not surplus.genset_on and surplus.batt_charge_kw > 0
    full = BatteryState.at_soc(config.battery, 10, 1.0)
    covered = step_load_following(config, full, HourInputs(0, 0.0, 0.0, 10.0))
    assert not covered.genset_on
    assert covered.batt_discharge_kw == pytest.approx(10.0 / 0.97)
    short = step_load_following(SystemConfig(genset_kw=50.0), BatteryState(0.0), HourInputs(0, 0.0, 0.0, 100.0))
    assert short.genset_kw == 50.0
    assert short.unmet_kw == pytest.approx(50.0)
    for record in (surplus, covered, short):
        assert settle(record) < 1e-9


def test_cycle_charging_with_full_bank_covers_only_the_deficit():
    config = SystemConfig(n_batt=10, genset_kw=150.0, converter_kw=1000.0, strategy=Strategy.CYCLE_CHARGING)
    full = BatteryState.at_soc(config.battery, 10, 1.0)
    inputs = HourInputs(0, 50.0, 0.0, 100.0)
    record = step_cycle_charging(config, full, inputs)
    assert record.genset_kw == pytest.approx(37.5)
    assert record.excess_kw < 1e-9
    assert record.batt_charge_kw == 0.0
    assert record.unmet_kw == 0.0
    assert record == step_load_following(config, full, inputs)
    assert settle(record) < 1e-9


def test_cycle_charging_without_storage_runs_at_minimum_load():
    config = SystemConfig(genset_kw=490.0, converter_kw=331.0, strategy=Strategy.CYCLE_CHARGING)
    record = step_cycle_charging(config, BatteryState(0.0), HourInputs(0, 0.0, 0.0, 10.0))
    assert record.genset_kw == pytest.approx(122.5)
    assert record.excess_kw == pytest.approx(112.5)
    assert settle(record) < 1e-9


def test_cycle_charging_with_headroom_runs_at_rated_power():
    config = SystemConfig(n_batt=1000, genset_kw=490.0, converter_kw=1000.0, strategy=Strategy.CYCLE_CHARGING)
    empty = BatteryState.at_soc(config.battery, 1000, 0.2)
    inputs = HourInputs(0, 0.0, 0.0, 10.0)
    record = step_cycle_charging(config, empty, inputs)
    assert record.genset_kw == 490.0
    assert record.batt_charge_kw == pytest.approx(480.0 * 0.97)
    assert record.excess_kw == pytest.approx(0.0, abs=1e-9)
    assert step_load_following(config.resized(strategy=Strategy.LOAD_FOLLOWING), empty, inputs).genset_kw == 122.5
    assert settle(record) < 1e-9


def test_cycle_charging_never_spills_pv_while_the_genset_runs():
    config = SystemConfig(n_batt=10, genset_kw=150.0, converter_kw=1000.0, strategy=Strategy.CYCLE_CHARGING)
    nearly_full = BatteryState(19.5)
    record = step_cycle_charging(config, nearly_full, HourInputs(0, 50.0, 0.0, 100.0))
    assert record.genset_on
    assert record.excess_kw == pytest.approx(0.0, abs=1e-9)
    assert record.unmet_kw == 0.0
    assert record.batt_charge_kw == pytest.approx(0.5 / np.sqrt(0.97))
    assert settle(record) < 1e-9


def test_balance_check_detects_perturbed_excess(random_inputs):
    inputs = random_inputs(6)
    result = inputs.simulate(SystemConfig(n_pv=300, n_batt=200, genset_kw=200.0, converter_kw=150.0))
    records = list(result.records)
    records[7] = records[7]._replace(excess_kw=records[7].excess_kw + 1.0)
    perturbed = DispatchResult(tuple(records), result.strategy, result.initial_soc_kwh)
    assert verify_energy_balance(perturbed) >= 1.0 - 1e-6
    assert int(np.argmax(np.abs(energy_balance_residuals(perturbed)))) == 7
    assert verify_energy_balance(inputs.simulate(SystemConfig())) == 0.0


def test_fixed_fuel_term_lets_cycle_charging_burn_less():
    hours = [HourInputs(hour, 0.0, 0.0, 50.0) for hour in range(48)]
    base = SystemConfig(n_batt=100, genset_kw=100.0, converter_kw=1000.0)
    empty = BatteryState.at_soc(base.battery, 100, 0.2)
    lf = run_hours(base, empty, hours)
    cc = run_hours(base.resized(strategy=Strategy.CYCLE_CHARGING), empty, hours)
    assert lf == pytest.approx(48 * (0.08145 * 100.0 + 0.246 * 50.0))
    assert cc < lf
    linear = base.resized(genset_template=NO_FIXED_FUEL)
    assert run_hours(linear, empty, hours) <= run_hours(linear.resized(strategy=Strategy.CYCLE_CHARGING),
                                                        empty, hours)
