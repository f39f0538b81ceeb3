# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from typing import Tuple, Sequence
import numpy as np
from scipy.optimize import brentq
from src.model.exceptions import ResourceException
from src.model.resource_control.time_series import TimeSeries, MonthlyProfile, DailyShape, Quantity
from src.utility.bronze import time_utility


DEFAULT_DAYLIGHT_WINDOW = (6, 18)
_MAX_LOAD_EXPONENT = 64.0


def _daily_factors(rng: np.random.Generator, day_variability: float) -> np.ndarray:
    """
    Internal function for drawing mean-one lognormal day factors.
    :param rng: Seeded generator.
    :param day_variability: Standard deviation of the underlying normal.
    :return: Array of 365 day factors.
    """
    draws = rng.standard_normal(time_utility.DAYS_PER_YEAR)
    return np.exp(day_variability * draws - 0.5 * day_variability ** 2)


def synthesize_from_monthly(profile: MonthlyProfile, shape: DailyShape, day_variability: float, seed: int,
                            daylight_window: Tuple[int, int] = DEFAULT_DAYLIGHT_WINDOW) -> TimeSeries:
    """
    Function for synthesizing an hourly series from monthly means.
    Each day is the monthly mean distributed by the daily shape and multiplied by a lognormal day factor,
    afterwards every month is renormalized to restore its mean.
    :param profile: Monthly means in the quantity's units.
    :param shape: Within-day distribution.
    :param day_variability: Day-to-day variability in [0, 1).
    :param seed: Random seed.
    :param daylight_window: (first hour, end hour) outside of which irradiance is zero.
        Only applied to irradiance. Defaults to 06:00 - 18:00.
    :return: Synthesized series.
    """
    if not 0 <= day_variability < 1:
        raise ResourceException(
            "day variability must lie in [0, 1)", context=day_variability)
    if profile.quantity is Quantity.GHI:
        shape = shape.restricted_to(*daylight_window)
    rng = np.random.default_rng(seed)
    day_factors = _daily_factors(rng, day_variability)
    day_means = profile.values[time_utility.get_month_of_day()]
    days = (day_means * day_factors)[:, None] * \
        (shape.weights * time_utility.HOURS_PER_DAY)[None, :]
    values = days.reshape(-1)
    for month, (start, end) in enumerate(time_utility.get_month_slices()):
        current = float(np.mean(values[start:end]))
        if current != 0:
            values[start:end] *= profile.values[month] / current
    return TimeSeries(profile.quantity, values)


def _peak_to_mean(base: np.ndarray, exponent: float) -> float:
    """
    Internal function for the peak-to-mean ratio of a power-transformed series.
    :param base: Positive base series, normalized to a maximum of 1.
    :param exponent: Power exponent.
    :return: Ratio of maximum to mean.
    """
    return 1.0 / float(np.mean(np.power(base, exponent)))


def synthesize_load(avg_daily_kwh: float, peak_kw: float, shape: DailyShape, seed: int,
                    day_variability: float = 0.05, monthly_factors: Sequence[float] = None) -> TimeSeries:
    """
    Function for synthesizing an hourly load that meets an average daily energy and an annual peak.
    A seeded day-to-day variation is applied to the daily shape, the result is raised to the power that yields
    the requested peak-to-mean ratio and finally scaled to the requested mean.
    :param avg_daily_kwh: Average daily energy in kWh/day.
    :param peak_kw: Annual peak in kW, at least avg_daily_kwh / 24.
    :param shape: Within-day load shape.
    :param seed: Random seed.
    :param day_variability: Day-to-day variability in [0, 1). Defaults to 0.05.
    :param monthly_factors: Optional 12 relative monthly levels. Defaults to None for a flat year.
    :return: Load series.
    """
    mean_kw = avg_daily_kwh / time_utility.HOURS_PER_DAY
    if avg_daily_kwh <= 0:
        raise ResourceException(
            "average daily load must be positive", context=avg_daily_kwh)
    if peak_kw < mean_kw * (1 - 1e-12):
        raise ResourceException(
            "peak load below average power, load factor would exceed 1",
            context={"peak_kw": peak_kw, "average_kw": mean_kw})
    if not 0 <= day_variability < 1:
        raise ResourceException(
            "day variability must lie in [0, 1)", context=day_variability)
    rng = np.random.default_rng(seed)
    day_factors = _daily_factors(rng, day_variability)
    if monthly_factors is not None:
        monthly_factors = np.asarray(monthly_factors, dtype=float)
        if monthly_factors.shape != (12,) or np.any(monthly_factors <= 0):
            raise ResourceException(
                "monthly load factors need 12 positive values")
        day_factors = day_factors * \
            monthly_factors[time_utility.get_month_of_day()]
    base = (day_factors[:, None] * shape.weights[None, :]).reshape(-1)
    base = base / np.max(base)

    target_ratio = peak_kw / mean_kw
    if target_ratio <= 1.0:
        exponent = 0.0
    else:
        upper = _MAX_LOAD_EXPONENT
        if _peak_to_mean(base, upper) < target_ratio:
            raise ResourceException(
                "load shape cannot reach the requested peak-to-mean ratio", context=target_ratio)
        exponent = brentq(lambda gamma: _peak_to_mean(base, gamma) - target_ratio,
                          0.0, upper, xtol=1e-12, rtol=1e-12)
    shaped = np.power(base, exponent)
    return TimeSeries(Quantity.LOAD, shaped * (mean_kw / np.mean(shaped)))
