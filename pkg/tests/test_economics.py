# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import math
import numpy as np
import pytest
from src.model.exceptions import EconomicsException
from src.model.dispatch_control.system_config import SystemConfig
from src.model.dispatch_control.dispatch_engine import DispatchAggregates
from src.model.economics_control.finance import (FinanceSpec, real_rate, crf, annuity_pv, replacement_years,
                                                 salvage_value)
from src.model.economics_control.costing import (ComponentPrices, UnitPrice, CostRow, COST_COLUMNS, cost_events,
                                                 component_npc, summarize_rows, system_summary, baseline_grid,
                                                 cost_shares)
from src.model.resource_control.time_series import TimeSeries, Quantity


ANNUAL_LOAD_KWH = 884_833.0
FIN = FinanceSpec()
TABLE_PRICES = ComponentPrices(battery=UnitPrice(100.0, 100.0, 1.0, 5))
# Published cost tables as (component, capital, replacement, O&M, fuel, salvage).
PUBLISHED_TABLES = {
    "scenario_1": ([("DG", 245_000, 0, 51_865, 24_228, 30_826), ("BT", 105_900, 215_477, 13_538, 0, 0),
                    ("WT", 72_762, 22_687, 37_685, 0, 12_715), ("PV", 158_915, 0, 40_593, 0, 0),
                    ("Converter", 92_612, 0, 42_282, 0, 0)], 0.0955, 31_667),
    "scenario_2": ([("DG", 245_000, 0, 65_582, 31_113, 23_880), ("BT", 141_400, 343_813, 18_076, 0, 15_217),
                    ("PV", 204_462, 0, 52_227, 0, 0), ("Converter", 104_140, 0, 47_545, 0, 0)], 0.1073, 40_620),
    "scenario_3": ([("BT", 161_800, 329_218, 20_683, 0, 0), ("WT", 55_386, 17_269, 28_686, 0, 9_679),
                    ("PV", 487_323, 0, 124_481, 0, 0), ("Converter", 129_860, 0, 59_287, 0, 0)], 0.124, 44_585),
    "scenario_4": ([("BT", 193_600, 393_966, 24_748, 0, 0), ("PV", 638_456, 0, 163_086, 0, 0),
                    ("Converter", 127_742, 0, 58_320, 0, 0)], 0.142, 50_071)
}


def aggregates(served_kwh: float = ANNUAL_LOAD_KWH, fuel_l: float = 0.0, genset_hours: int = 0,
               genset_kwh: float = 0.0) -> DispatchAggregates:
    return DispatchAggregates(load_kwh=served_kwh, served_kwh=served_kwh, unmet_kwh=0.0, pv_kwh=0.0, wind_kwh=0.0,
                              genset_kwh=genset_kwh, batt_charge_kwh=0.0, batt_discharge_kwh=0.0, excess_kwh=0.0,
                              converter_loss_kwh=0.0, fuel_l=fuel_l, genset_hours=genset_hours, genset_starts=0,
                              renewable_fraction=0.0, unmet_fraction=0.0)


def row(component: str, *amounts: float) -> CostRow:
    return CostRow(component, *map(float, amounts))


def test_real_rate_and_crf():
    assert FIN.real_rate == pytest.approx(0.06, abs=1e-12)
    assert crf(0.06, 25) == pytest.approx(0.078227, abs=1e-6)
    assert crf(0.0, 20) == pytest.approx(1 / 20)
    assert real_rate(0.05, 0.05) == 0.0


def test_crf_matches_annuity_brute_force():
    for i, n in ((0.06, 25), (0.03, 10), (0.12, 7)):
        brute = sum((1 + i) ** -t for t in range(1, n + 1))
        assert crf(i, n) == pytest.approx(1 / brute, rel=1e-12)
        assert annuity_pv(1000.0, i, n) == pytest.approx(1000.0 * brute, rel=1e-12)


def test_finance_preconditions():
    with pytest.raises(EconomicsException):
        crf(0.06, 0)
    with pytest.raises(EconomicsException):
        FinanceSpec(nominal_rate=0.01, inflation=0.05)
    with pytest.raises(EconomicsException):
        salvage_value(100.0, 0.0, 10.0)


def test_replacement_schedule():
    assert replacement_years(5, 25) == (5, 10, 15, 20)
    assert replacement_years(20, 25) == (20,)
    assert replacement_years(25, 25) == ()
    assert replacement_years(math.inf, 25) == ()


def test_salvage_value_remaining_life():
    assert salvage_value(72_762.0, 20, 25) == pytest.approx(72_762.0 * 15 / 20)
    assert salvage_value(100.0, 5, 25) == 0.0
    assert salvage_value(100.0, 30, 25) == pytest.approx(100.0 * 5 / 30)


def test_battery_bank_row_of_scenario_1():
    config = SystemConfig(n_batt=1059)
    events = cost_events(config, aggregates(), TABLE_PRICES, FIN)
    bank = component_npc(events[0], FIN)
    assert bank.component == "BT"
    assert bank.capital == pytest.approx(105_900)
    assert bank.replacement == pytest.approx(215_477, rel=1e-4)
    assert bank.om == pytest.approx(13_538, rel=1e-4)
    assert bank.salvage == 0.0
    assert bank.total == pytest.approx(334_915, rel=1e-4)


def test_wind_row_of_scenario_1():
    events = cost_events(SystemConfig(n_wt=67), aggregates(), TABLE_PRICES, FIN)
    turbines = component_npc(events[0], FIN)
    assert turbines.capital == pytest.approx(72_762)
    assert turbines.replacement == pytest.approx(22_687, rel=1e-3)
    assert turbines.om == pytest.approx(37_685, rel=1e-3)
    assert turbines.salvage == pytest.approx(12_715, rel=1e-3)


def test_genset_row_counts_runtime_life_and_om_per_hour():
    # About 276 operating hours per year reproduce the published O&M and salvage columns.
    fuel_l = 24_228 * FIN.crf / 0.168
    events = cost_events(SystemConfig(genset_kw=490.0), aggregates(fuel_l=fuel_l, genset_hours=276),
                         TABLE_PRICES, FIN)
    genset = component_npc(events[0], FIN)
    assert genset.component == "DG"
    assert genset.capital == pytest.approx(245_000)
    assert genset.replacement == 0.0
    assert genset.om == pytest.approx(51_865, rel=0.005)
    assert genset.fuel == pytest.approx(24_228, rel=1e-9)
    assert genset.salvage == pytest.approx(30_826, rel=0.005)


def test_genset_without_runtime_keeps_full_salvage():
    events = cost_events(SystemConfig(genset_kw=100.0), aggregates(), TABLE_PRICES, FIN)
    genset = component_npc(events[0], FIN)
    assert genset.om == 0.0 and genset.replacement == 0.0
    assert genset.salvage == pytest.approx(50_000 * (1.06 ** -25))


@pytest.mark.parametrize("scenario", sorted(PUBLISHED_TABLES))
def test_published_cost_tables_reproduce_lcoe_and_operating_cost(scenario):
    rows, lcoe, operating_cost = PUBLISHED_TABLES[scenario]
    summary = summarize_rows([row(*entry) for entry in rows], ANNUAL_LOAD_KWH, FIN)
    assert summary.lcoe == pytest.approx(lcoe, rel=0.005)
    assert summary.operating_cost == pytest.approx(operating_cost, rel=0.005)
    assert summary.npc == pytest.approx(summary.system.total)


def test_summary_requires_served_energy():
    with pytest.raises(EconomicsException):
        summarize_rows([row("PV", 100, 0, 0, 0, 0)], 0.0, FIN)
    assert summarize_rows([row("PV", 100, 0, 0, 0, 0)], 0.0, FIN, require_served=False).lcoe is None


def test_system_summary_orders_rows_and_columns():
    config = SystemConfig(n_pv=714, n_wt=67, n_batt=1059, genset_kw=490.0, converter_kw=331.0)
    summary = system_summary(config, aggregates(fuel_l=11_281.0, genset_hours=276), TABLE_PRICES, FIN)
    frame = summary.to_frame()
    assert list(frame["Component"]) == ["DG", "BT", "WT", "PV", "Converter", "System"]
    assert list(frame.columns[1:]) == list(COST_COLUMNS)
    assert frame["Total"].iloc[-1] == pytest.approx(frame["Total"].iloc[:-1].sum())
    assert summary.lcoe == pytest.approx(summary.npc * summary.crf / ANNUAL_LOAD_KWH)
    shares = cost_shares(summary)
    assert shares["share"].sum() == pytest.approx(1.0)


def test_baseline_grid():
    load = TimeSeries(Quantity.LOAD, np.full(8760, ANNUAL_LOAD_KWH / 8760))
    summary = baseline_grid(load, 0.16, FIN)
    assert summary.operating_cost == pytest.approx(141_576, rel=0.001)
    assert summary.npc == pytest.approx(1.8e6, rel=0.01)
    assert summary.lcoe == 0.16
    assert summary.capital == 0.0
    assert [entry.component for entry in summary.rows] == ["Grid"]
