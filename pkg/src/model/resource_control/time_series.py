# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import io
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Sequence
import numpy as np
import pandas as pd
from src.model.exceptions import TimeSeriesException, ResourceException
from src.utility.bronze import json_utility, time_utility


class Quantity(str, Enum):
    """
    Physical quantity of an hourly series.
    """
    LOAD = "load_kw"
    GHI = "ghi_kw_m2"
    WIND = "wind_ms"
    TEMPERATURE = "temp_c"

    @property
    def nonnegative(self) -> bool:
        """
        Flag, declaring whether values of the quantity must be nonnegative.
        """
        return self is not Quantity.TEMPERATURE


def _frozen_array(values: Sequence[float]) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class TimeSeries(object):
    """
    8760 hourly values of one physical quantity over a non-leap year.
    """
    quantity: Quantity
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "quantity", Quantity(self.quantity))
        values = _frozen_array(self.values)
        if values.ndim != 1 or len(values) != time_utility.HOURS_PER_YEAR:
            raise TimeSeriesException(
                f"expected {time_utility.HOURS_PER_YEAR} hourly values, got {values.size}", context=self.quantity.value)
        if not np.all(np.isfinite(values)):
            line = int(np.flatnonzero(~np.isfinite(values))[0]) + 1
            raise TimeSeriesException(
                "missing or non-finite value", line=line, context=self.quantity.value)
        if self.quantity.nonnegative and np.any(values < 0):
            line = int(np.flatnonzero(values < 0)[0]) + 1
            raise TimeSeriesException(
                f"negative value for nonnegative quantity", line=line, context=self.quantity.value)
        object.__setattr__(self, "values", values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TimeSeries) and self.quantity == other.quantity and np.array_equal(
            self.values, other.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))

    def with_values(self, values: Sequence[float]) -> "TimeSeries":
        """
        Method for deriving a series of the same quantity with new values.
        :param values: New hourly values.
        :return: New time series.
        """
        return TimeSeries(self.quantity, values)


@dataclass(frozen=True, eq=False)
class MonthlyProfile(object):
    """
    12 monthly means of an hourly quantity, in the quantity's units.
    """
    quantity: Quantity
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "quantity", Quantity(self.quantity))
        values = _frozen_array(self.values)
        if values.shape != (12,):
            raise ResourceException(
                "monthly profile needs exactly 12 values", context=values.size)
        if not np.all(np.isfinite(values)):
            raise ResourceException(
                "monthly profile contains non-finite values", context=self.quantity.value)
        if self.quantity.nonnegative and np.any(values < 0):
            raise ResourceException(
                "monthly profile contains negative values", context=self.quantity.value)
        object.__setattr__(self, "values", values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonthlyProfile) and self.quantity == other.quantity and np.array_equal(
            self.values, other.values)

    @classmethod
    def from_daily_totals(cls, quantity: Quantity, daily_totals: Sequence[float]) -> "MonthlyProfile":
        """
        Method for building a profile from monthly mean daily totals, e.g. irradiation in kWh/m²/d
        or load energy in kWh/d.
        :param quantity: Quantity of the hourly series.
        :param daily_totals: 12 monthly mean daily totals.
        :return: Monthly profile of hourly means.
        """
        return cls(quantity, np.asarray(daily_totals, dtype=float) / time_utility.HOURS_PER_DAY)

    @property
    def annual_mean(self) -> float:
        """
        Day-weighted annual mean of the profile.
        """
        return float(np.average(self.values, weights=time_utility.DAYS_PER_MONTH))


@dataclass(frozen=True, eq=False)
class DailyShape(object):
    """
    24 nonnegative weights summing to one, distributing a daily quantity over the hours of the day.
    """
    weights: np.ndarray

    def __post_init__(self) -> None:
        weights = _frozen_array(self.weights)
        if weights.shape != (24,) or not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise ResourceException(
                "daily shape needs 24 finite nonnegative weights")
        if abs(float(np.sum(weights)) - 1.0) > 1e-9:
            raise ResourceException(
                "daily shape weights must sum to 1", context=float(np.sum(weights)))
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_weights(cls, raw_weights: Sequence[float]) -> "DailyShape":
        """
        Method for normalizing raw hourly weights into a daily shape.
        :param raw_weights: 24 nonnegative weights with positive sum.
        :return: Daily shape.
        """
        raw = np.asarray(raw_weights, dtype=float)
        if raw.shape != (24,) or np.any(raw < 0) or not np.sum(raw) > 0:
            raise ResourceException(
                "daily shape needs 24 nonnegative weights with a positive sum")
        return cls(raw / np.sum(raw))

    @classmethod
    def uniform(cls) -> "DailyShape":
        return cls(np.full(24, 1.0 / 24))

    def restricted_to(self, first_hour: int, end_hour: int) -> "DailyShape":
        """
        Method for zeroing weights outside of a window of hours and renormalizing.
        :param first_hour: First hour of the window.
        :param end_hour: End hour of the window, exclusive.
        :return: Restricted daily shape.
        """
        mask = np.zeros(24, dtype=bool)
        mask[first_hour:end_hour] = True
        return DailyShape.from_weights(np.where(mask, self.weights, 0.0))


@dataclass(frozen=True)
class LoadStats(object):
    """
    Annual statistics of a load series.
    """
    avg_daily_kwh: float
    peak_kw: float
    load_factor: float


def load_daily_shapes(path: str) -> Dict[str, DailyShape]:
    """
    Function for loading named daily shapes from a JSON file mapping names to 24 raw weights.
    :param path: Path to the JSON file.
    :return: Dictionary of daily shapes.
    """
    return {name: DailyShape.from_weights(weights) for name, weights in json_utility.load(path).items()}


MONTHLY_PROFILE_KEYS = {
    "ghi_kwh_m2_day": (Quantity.GHI, True),
    "wind_ms": (Quantity.WIND, False),
    "temp_c": (Quantity.TEMPERATURE, False)
}


def load_monthly_profiles(path: str) -> Dict[Quantity, MonthlyProfile]:
    """
    Function for loading site climatology from a JSON file with 12 values per key:
    "ghi_kwh_m2_day" (daily irradiation totals), "wind_ms" and "temp_c" (monthly means).
    :param path: Path to the JSON file.
    :return: Monthly profiles per quantity.
    """
    data = json_utility.load(path)
    profiles = {}
    for key, (quantity, daily_totals) in MONTHLY_PROFILE_KEYS.items():
        if key not in data:
            raise ResourceException(f"monthly profile file lacks '{key}'", context=path)
        profiles[quantity] = MonthlyProfile.from_daily_totals(quantity, data[key]) if daily_totals else \
            MonthlyProfile(quantity, data[key])
    return profiles


def _parse_cell(cell: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        return np.nan
    return value if np.isfinite(value) else np.nan


def parse_hourly_csv(text: str, quantity: Quantity) -> TimeSeries:
    """
    Function for parsing an hourly CSV with header "hour,value" and 8760 data rows.
    Line numbers in errors count data rows from 1.
    :param text: CSV text.
    :param quantity: Quantity the values represent.
    :return: Validated time series.
    """
    quantity = Quantity(quantity)
    try:
        frame = pd.read_csv(io.StringIO(text), dtype=str,
                            keep_default_na=False, skipinitialspace=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as ex:
        raise TimeSeriesException(
            "malformed hourly CSV", context=str(ex).strip()) from ex
    if [str(column).strip() for column in frame.columns] != ["hour", "value"]:
        raise TimeSeriesException(
            "header mismatch, expected 'hour,value'", line=0, context=",".join(map(str, frame.columns)))
    if len(frame) != time_utility.HOURS_PER_YEAR:
        # First missing row for short files, first extra row for long ones.
        raise TimeSeriesException(
            f"expected {time_utility.HOURS_PER_YEAR} data rows, got {len(frame)}",
            line=min(len(frame), time_utility.HOURS_PER_YEAR) + 1, context=quantity.value)
    hours = frame["hour"].map(_parse_cell)
    values = frame["value"].map(_parse_cell)
    for column, parsed in (("hour", hours), ("value", values)):
        invalid = parsed.isna().to_numpy()
        if invalid.any():
            index = int(np.flatnonzero(invalid)[0])
            raise TimeSeriesException(
                f"non-numeric {column} cell", line=index + 1, context=frame[column].iloc[index])
    expected_hours = np.arange(time_utility.HOURS_PER_YEAR)
    mismatched = hours.to_numpy() != expected_hours
    if mismatched.any():
        index = int(np.flatnonzero(mismatched)[0])
        raise TimeSeriesException(
            f"hour column must run 0..8759 strictly increasing, expected {index}", line=index + 1,
            context=frame["hour"].iloc[index])
    values = values.to_numpy(dtype=float)
    if quantity.nonnegative and np.any(values < 0):
        index = int(np.flatnonzero(values < 0)[0])
        raise TimeSeriesException(
            f"negative value for {quantity.value}", line=index + 1, context=values[index])
    return TimeSeries(quantity, values)


def serialize_hourly_csv(ts: TimeSeries) -> str:
    """
    Function for serializing a time series into the hourly CSV format.
    :param ts: Time series.
    :return: CSV text.
    """
    frame = pd.DataFrame({"hour": np.arange(len(ts)), "value": ts.values})
    return frame.to_csv(index=False, lineterminator="\n")


def scale_to_mean(ts: TimeSeries, target_mean: float) -> TimeSeries:
    """
    Function for scaling a series multiplicatively to a target annual mean.
    :param ts: Source series with positive mean.
    :param target_mean: Nonnegative target mean.
    :return: Scaled series.
    """
    source_mean = ts.mean
    if not source_mean > 0:
        raise ResourceException(
            "cannot scale a series with nonpositive mean", context=source_mean)
    if target_mean < 0:
        raise ResourceException(
            "target mean must be nonnegative", context=target_mean)
    if target_mean == source_mean:
        return ts
    return ts.with_values(ts.values * (target_mean / source_mean))


def monthly_means(ts: TimeSeries) -> MonthlyProfile:
    """
    Function for aggregating an hourly series into monthly means.
    :param ts: Time series.
    :return: Monthly profile.
    """
    return MonthlyProfile(ts.quantity, [float(np.mean(ts.values[start:end]))
                                        for start, end in time_utility.get_month_slices()])


def load_stats(ts: TimeSeries) -> LoadStats:
    """
    Function for calculating annual load statistics.
    :param ts: Load series.
    :return: Load statistics.
    """
    if ts.quantity is not Quantity.LOAD:
        raise ResourceException(
            "load statistics need a load series", context=ts.quantity.value)
    peak_kw = float(np.max(ts.values))
    if not peak_kw > 0:
        raise ResourceException("load series is all zero")
    mean_kw = ts.mean
    return LoadStats(avg_daily_kwh=mean_kw * time_utility.HOURS_PER_DAY, peak_kw=peak_kw,
                     load_factor=mean_kw / peak_kw)


@dataclass(frozen=True)
class ResourceSet(object):
    """
    Hourly site resources: irradiance, wind speed at anemometer height and ambient temperature.
    """
    ghi: TimeSeries
    wind: TimeSeries
    temperature: TimeSeries

    def __post_init__(self) -> None:
        for name, quantity in (("ghi", Quantity.GHI), ("wind", Quantity.WIND),
                               ("temperature", Quantity.TEMPERATURE)):
            if getattr(self, name).quantity is not quantity:
                raise ResourceException(f"resource '{name}' must be a {quantity.value} series",
                                        context=getattr(self, name).quantity.value)
