# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import numpy as np
import pytest
from src.configuration import paths
from src.model.exceptions import ComponentSpecException, BatteryStateException
from src.model.component_control.pv_model import PvSpec, pv_power, pv_cell_temperature
from src.model.component_control.wind_model import (WindSpec, PowerCurve, load_power_curve, hub_wind_speed,
                                                    turbine_power)
from src.model.component_control.battery_model import (BatterySpec, BatteryState, battery_step, max_charge_kw,
                                                       max_discharge_kw)
from src.model.component_control.genset_model import GensetSpec, genset_step
from src.model.component_control.converter_model import (ConverterSpec, Direction, converter_flow,
                                                         converter_sizing_hint)


def test_pv_power_at_stc_like_conditions():
    spec = PvSpec()
    # Cell at 25 °C: ambient chosen so the NOCT model lands on STC temperature.
    t_a = 25.0 - (43.0 - 20.0) / 800.0 * 1000.0
    assert pv_power(spec, 714, 1.0, t_a) == pytest.approx(714 * 0.9)


def test_pv_power_is_zero_in_the_dark_and_never_negative():
    spec = PvSpec()
    assert pv_power(spec, 100, 0.0, 30.0) == 0.0
    assert pv_power(spec, 100, 1.0, 400.0) == 0.0


def test_pv_temperature_slope_matches_coefficient():
    spec = PvSpec()
    g_t, t_a, h = 0.8, 30.0, 1e-4
    numeric = (pv_power(spec, 10, g_t, t_a + h) - pv_power(spec, 10, g_t, t_a - h)) / (2 * h)
    analytic = 10 * spec.unit_rating_kw * spec.derating * g_t * spec.temp_coeff
    assert numeric == pytest.approx(analytic, rel=1e-6)


def test_pv_cell_temperature_noct_definition():
    assert pv_cell_temperature(20.0, 43.0, 800.0) == pytest.approx(43.0)


def test_pv_spec_rejects_invalid_parameters():
    with pytest.raises(ComponentSpecException):
        PvSpec(derating=1.2)
    with pytest.raises(ComponentSpecException):
        PvSpec(noct=60.0)


def test_hub_wind_speed_power_law():
    assert hub_wind_speed(5.0, 10.0, 10.0, 1 / 7) == 5.0
    assert hub_wind_speed(5.0, 10.0, 12.0, 1 / 7) == pytest.approx(5.0 * 1.2 ** (1 / 7))
    with pytest.raises(ComponentSpecException):
        hub_wind_speed(5.0, 0.0, 12.0, 1 / 7)


def test_turbine_power_curve_regions():
    spec = WindSpec()
    speeds = np.array([0.0, 2.9, 3.0, 12.0, 20.0, 24.0, 30.0])
    power = turbine_power(spec, 67, speeds)
    assert power[0] == power[1] == power[2] == 0.0
    assert power[3] == pytest.approx(67 * 3.0)
    assert power[4] == pytest.approx(67 * 3.0)
    assert power[5] == power[6] == 0.0


def test_turbine_power_monotone_between_cut_in_and_rated():
    for curve in (PowerCurve.from_cubic(), load_power_curve(paths.DEFAULT_POWER_CURVE_FILE)):
        spec = WindSpec(power_curve=curve)
        speeds = np.linspace(curve.cut_in, curve.rated_speed, 500)
        assert np.all(np.diff(turbine_power(spec, 1, speeds)) >= 0)


def test_turbine_power_scales_with_air_density():
    spec = WindSpec()
    assert turbine_power(spec, 1, 12.0, rho=1.225 * 0.9) == pytest.approx(0.9 * 3.0)


def test_power_curve_rejects_invalid_points():
    with pytest.raises(ComponentSpecException):
        PowerCurve(np.array([0.0, 5.0, 4.0]), np.array([0.0, 0.5, 1.0]))
    with pytest.raises(ComponentSpecException):
        PowerCurve(np.array([0.0, 5.0]), np.array([0.0, 0.5]))


def test_battery_full_cycle_roundtrip_efficiency():
    spec = BatterySpec(max_charge_rate_kw=100.0, max_discharge_rate_kw=100.0)
    state = BatteryState(spec.floor_kwh(1))
    state, accepted, _ = battery_step(spec, 1, state, 1.0)
    state, _, delivered = battery_step(spec, 1, state, -10.0)
    assert delivered / accepted == pytest.approx(0.97, abs=1e-9)


def test_battery_step_stays_in_soc_window():
    spec = BatterySpec(self_discharge=0.001)
    rng = np.random.default_rng(7)
    n_units = 5
    state = BatteryState.at_soc(spec, n_units, 0.6)
    for request in rng.uniform(-15.0, 15.0, 100_000):
        state, accepted, delivered = battery_step(spec, n_units, state, float(request))
        assert spec.floor_kwh(n_units) - 1e-9 <= state.stored_energy <= spec.ceiling_kwh(n_units) + 1e-9
        assert accepted >= 0 and delivered >= 0 and accepted * delivered == 0


def test_battery_step_honours_rate_limits_and_lookahead():
    spec = BatterySpec(max_charge_rate_kw=0.5, max_discharge_rate_kw=0.5)
    state = BatteryState.at_soc(spec, 10, 0.5)
    assert max_charge_kw(spec, 10, state) == pytest.approx(5.0)
    assert max_discharge_kw(spec, 10, state) == pytest.approx(5.0)
    _, accepted, _ = battery_step(spec, 10, state, 50.0)
    assert accepted == pytest.approx(5.0)
    almost_full = BatteryState.at_soc(BatterySpec(), 10, 0.95)
    _, accepted, _ = battery_step(BatterySpec(), 10, almost_full, 50.0)
    assert accepted == pytest.approx(max_charge_kw(BatterySpec(), 10, almost_full))
    assert accepted == pytest.approx(1.0 / np.sqrt(0.97))


def test_battery_state_outside_window_is_rejected():
    spec = BatterySpec()
    with pytest.raises(BatteryStateException):
        battery_step(spec, 1, BatteryState(0.1), 1.0)


def test_genset_step_minimum_load_and_fuel():
    spec = GensetSpec(rated_kw=490.0)
    assert genset_step(spec, 0.0) == (0.0, 0.0, False)
    output, fuel, running = genset_step(spec, 50.0)
    assert running and output == pytest.approx(122.5)
    assert fuel == pytest.approx(0.08145 * 490 + 0.246 * 122.5)
    output, _, _ = genset_step(spec, 900.0)
    assert output == 490.0


def test_converter_flow_clips_and_applies_efficiency():
    spec = ConverterSpec(rated_kw=331.0)
    assert converter_flow(spec, Direction.DC_TO_AC, 100.0) == pytest.approx(97.0)
    assert converter_flow(spec, Direction.AC_TO_DC, 500.0) == pytest.approx(331.0 * 0.97)
    assert converter_flow(ConverterSpec(rated_kw=0.0), Direction.DC_TO_AC, 100.0) == 0.0


def test_converter_sizing_hint_covers_the_peak_through_the_inverter():
    assert converter_sizing_hint(390.41, 0.97) == pytest.approx(402.48, abs=0.01)
    assert converter_sizing_hint(390.41, 1.0) == 390.41
    assert converter_sizing_hint(0.0, 0.97) == 0.0
    hint = converter_sizing_hint(390.41, 0.97)
    assert converter_flow(ConverterSpec(rated_kw=hint), Direction.DC_TO_AC, hint) == pytest.approx(390.41)


@pytest.mark.parametrize("peak_kw, efficiency", [(100.0, 0.0), (100.0, 1.2), (-1.0, 0.97)])
def test_converter_sizing_hint_rejects_invalid_inputs(peak_kw, efficiency):
    with pytest.raises(ComponentSpecException):
        converter_sizing_hint(peak_kw, efficiency)
