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
from src.model.exceptions import (TimeSeriesException, ResourceException, NetworkDisabledException,
                                  NasaPowerStatusException, NasaPowerPayloadException)
from src.model.resource_control.time_series import (TimeSeries, MonthlyProfile, DailyShape, Quantity,
                                                    parse_hourly_csv, serialize_hourly_csv, scale_to_mean,
                                                    monthly_means, load_stats, load_daily_shapes,
                                                    load_monthly_profiles)
from src.model.resource_control.synthesis import synthesize_from_monthly, synthesize_load
from src.model.resource_control.nasa_power import fetch_nasa_monthly, parse_nasa_payload
from src.utility.bronze import time_utility


def hourly_csv(values) -> str:
    return "hour,value\n" + "".join(f"{hour},{value}\n" for hour, value in enumerate(values))


def test_parse_hourly_csv_reads_8760_rows():
    ts = parse_hourly_csv(hourly_csv(np.arange(8760) % 24), Quantity.LOAD)
    assert len(ts) == 8760
    assert ts.values[25] == 1.0


def test_parse_hourly_csv_reports_negative_value_line():
    values = [1.0] * 8760
    values[12] = -3.0
    with pytest.raises(TimeSeriesException) as info:
        parse_hourly_csv(hourly_csv(values), Quantity.LOAD)
    assert info.value.line == 13


def test_parse_hourly_csv_allows_negative_temperatures():
    values = [-5.0] * 8760
    assert parse_hourly_csv(hourly_csv(values), Quantity.TEMPERATURE).mean == -5.0


def test_parse_hourly_csv_reports_row_count_line():
    with pytest.raises(TimeSeriesException, match="8760") as info:
        parse_hourly_csv(hourly_csv([1.0] * 8759), Quantity.GHI)
    assert info.value.line == 8760
    with pytest.raises(TimeSeriesException) as info:
        parse_hourly_csv(hourly_csv([1.0] * 8762), Quantity.GHI)
    assert info.value.line == 8761


def test_parse_hourly_csv_rejects_bad_header_and_cells():
    with pytest.raises(TimeSeriesException, match="header"):
        parse_hourly_csv(hourly_csv([1.0] * 8760).replace("hour,value", "h,v", 1), Quantity.GHI)
    values = [1.0] * 8760
    values[99] = "abc"
    with pytest.raises(TimeSeriesException) as info:
        parse_hourly_csv(hourly_csv(values), Quantity.GHI)
    assert info.value.line == 100


def test_serialize_hourly_csv_is_parseable():
    ts = TimeSeries(Quantity.WIND, np.linspace(0.0, 12.0, 8760))
    assert parse_hourly_csv(serialize_hourly_csv(ts), Quantity.WIND) == ts


def test_hourly_csv_text_survives_parse_and_serialize():
    values = np.random.default_rng(3).random(8760) * 12.0
    text = serialize_hourly_csv(TimeSeries(Quantity.WIND, values))
    ts = parse_hourly_csv(text, Quantity.WIND)
    assert np.array_equal(ts.values, values)
    assert serialize_hourly_csv(ts) == text


def test_parse_hourly_csv_rejects_non_finite_cells():
    values = [1.0] * 8760
    values[4] = "inf"
    with pytest.raises(TimeSeriesException) as info:
        parse_hourly_csv(hourly_csv(values), Quantity.GHI)
    assert info.value.line == 5


def test_scale_to_mean_hits_target_exactly():
    ts = TimeSeries(Quantity.GHI, np.random.default_rng(1).uniform(0.0, 1.0, 8760))
    scaled = scale_to_mean(ts, 5.6 / 24)
    assert scaled.mean == pytest.approx(5.6 / 24, rel=1e-12)
    with pytest.raises(ResourceException):
        scale_to_mean(TimeSeries(Quantity.GHI, np.zeros(8760)), 1.0)


def test_monthly_profile_validation_and_daily_totals():
    with pytest.raises(ResourceException):
        MonthlyProfile(Quantity.GHI, [1.0] * 11)
    profile = MonthlyProfile.from_daily_totals(Quantity.GHI, [4.8] * 12)
    assert np.allclose(profile.values, 0.2)
    assert profile.annual_mean == pytest.approx(0.2)


def test_synthesize_from_monthly_reproduces_monthly_means():
    profile = MonthlyProfile(Quantity.WIND, [5.8, 6.0, 5.9, 5.6, 5.5, 6.3, 6.0, 5.5, 4.9, 4.9, 5.3, 5.6])
    ts = synthesize_from_monthly(profile, DailyShape.uniform(), 0.3, seed=42)
    assert np.allclose(monthly_means(ts).values, profile.values, rtol=1e-9)
    again = synthesize_from_monthly(profile, DailyShape.uniform(), 0.3, seed=42)
    assert ts == again


def test_synthesized_irradiance_is_dark_at_night():
    shapes = load_daily_shapes(paths.DAILY_SHAPES_FILE)
    profile = MonthlyProfile.from_daily_totals(Quantity.GHI, [5.6] * 12)
    ts = synthesize_from_monthly(profile, shapes["solar"], 0.15, seed=3)
    hour_of_day = time_utility.get_hour_of_day()
    night = (hour_of_day < 6) | (hour_of_day >= 18)
    assert np.all(ts.values[night] == 0.0)
    assert ts.mean * 24 == pytest.approx(5.6, rel=1e-9)


def test_synthesize_load_meets_energy_and_peak():
    shapes = load_daily_shapes(paths.DAILY_SHAPES_FILE)
    ts = synthesize_load(2424.2, 390.41, shapes["ev_charging"], seed=20240526)
    stats = load_stats(ts)
    assert stats.avg_daily_kwh == pytest.approx(2424.2, rel=1e-9)
    assert stats.peak_kw == pytest.approx(390.41, rel=1e-6)
    assert float(np.sum(ts.values)) == pytest.approx(884_833, rel=1e-4)
    assert np.all(ts.values >= 0)


def test_synthesize_load_rejects_load_factor_above_one():
    with pytest.raises(ResourceException):
        synthesize_load(2400.0, 50.0, DailyShape.uniform(), seed=1)


def test_synthesize_load_applies_monthly_factors():
    factors = [1.0] * 6 + [1.5] * 6
    ts = synthesize_load(2400.0, 300.0, DailyShape.from_weights(range(1, 25)), seed=5, day_variability=0.0,
                         monthly_factors=factors)
    means = monthly_means(ts).values
    assert means[8] > means[2]


def test_shipped_profiles_load():
    profiles = load_monthly_profiles(paths.KHOBAR_PROFILE_FILE)
    assert profiles[Quantity.GHI].values[0] == pytest.approx(3.9 / 24)
    assert profiles[Quantity.TEMPERATURE].values[6] == 37.3


class StubResponse(object):
    def __init__(self, status_code: int, payload: dict) -> None:
        self.status_code = status_code
        self.payload = payload

    def json(self) -> dict:
        return self.payload


class StubSession(object):
    def __init__(self, response: StubResponse) -> None:
        self.response = response
        self.calls = []

    def get(self, url: str, params: dict = None, timeout: float = None) -> StubResponse:
        self.calls.append((url, params))
        return self.response


def nasa_payload() -> dict:
    def months(value: float) -> dict:
        return {month: value for month in time_utility.MONTH_NAMES}
    return {"properties": {"parameter": {"ALLSKY_SFC_SW_DWN": months(5.6), "WS10M": months(5.61),
                                         "T2M": months(28.0)}}}


def test_nasa_fetch_requires_network_flag():
    session = StubSession(StubResponse(200, nasa_payload()))
    with pytest.raises(NetworkDisabledException):
        fetch_nasa_monthly(26.35, 50.21, allow_network=False, session=session)
    assert session.calls == []


def test_nasa_fetch_parses_climatology(monkeypatch):
    monkeypatch.setenv("NASA_POWER_BASE_URL", "http://power.invalid/")
    session = StubSession(StubResponse(200, nasa_payload()))
    profiles = fetch_nasa_monthly(26.35, 50.21, allow_network=True, session=session)
    assert session.calls[0][0].startswith("http://power.invalid/api/")
    assert profiles[Quantity.GHI].values[0] == pytest.approx(5.6 / 24)
    assert profiles[Quantity.WIND].annual_mean == pytest.approx(5.61)


def test_nasa_fetch_surfaces_status_and_payload_errors():
    with pytest.raises(NasaPowerStatusException):
        fetch_nasa_monthly(26.35, 50.21, allow_network=True, session=StubSession(StubResponse(404, {})))
    payload = nasa_payload()
    del payload["properties"]["parameter"]["WS10M"]["JUL"]
    with pytest.raises(NasaPowerPayloadException, match="WS10M.JUL"):
        parse_nasa_payload(payload)
