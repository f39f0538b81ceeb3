# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass, field
from typing import Union
import numpy as np
import pandas as pd
from src.model.exceptions import ComponentSpecException


ArrayLike = Union[float, np.ndarray]
STANDARD_AIR_DENSITY = 1.225


@dataclass(frozen=True, eq=False)
class PowerCurve(object):
    """
    Piecewise-linear turbine power curve as fraction of rated power over hub wind speed.
    The first point marks cut-in, the last point marks cut-out: output is zero at or below the first speed
    carrying a zero fraction and at or above the last speed.
    """
    speeds: np.ndarray
    fractions: np.ndarray

    def __post_init__(self) -> None:
        speeds = np.array(self.speeds, dtype=float)
        fractions = np.array(self.fractions, dtype=float)
        if speeds.ndim != 1 or speeds.shape != fractions.shape or len(speeds) < 2:
            raise ComponentSpecException(
                "power curve needs at least two (speed, fraction) points")
        if np.any(np.diff(speeds) <= 0):
            raise ComponentSpecException(
                "power curve speeds must be strictly increasing")
        if np.any(speeds < 0) or np.any((fractions < 0) | (fractions > 1)):
            raise ComponentSpecException(
                "power curve speeds must be nonnegative and fractions within [0, 1]")
        if fractions[0] != 0:
            raise ComponentSpecException(
                "power curve must start at zero output (cut-in)", context=fractions[0])
        if not np.isclose(np.max(fractions), 1.0):
            raise ComponentSpecException(
                "power curve must reach rated output", context=np.max(fractions))
        speeds.setflags(write=False)
        fractions.setflags(write=False)
        object.__setattr__(self, "speeds", speeds)
        object.__setattr__(self, "fractions", fractions)

    @property
    def cut_in(self) -> float:
        return float(self.speeds[int(np.argmax(self.fractions > 0)) - 1])

    @property
    def rated_speed(self) -> float:
        return float(self.speeds[int(np.argmax(self.fractions >= 1.0 - 1e-12))])

    @property
    def cut_out(self) -> float:
        return float(self.speeds[-1])

    def fraction(self, u_hub: ArrayLike) -> ArrayLike:
        """
        Method for evaluating the curve with linear interpolation.
        :param u_hub: Hub-height wind speed in m/s.
        :return: Fraction of rated output.
        """
        u_hub = np.asarray(u_hub, dtype=float)
        result = np.interp(u_hub, self.speeds, self.fractions,
                           left=0.0, right=0.0)
        result = np.where(u_hub >= self.cut_out, 0.0, result)
        return float(result) if result.ndim == 0 else result

    @classmethod
    def from_cubic(cls, cut_in: float = 3.0, rated: float = 12.0, cut_out: float = 24.0,
                   step: float = 0.5) -> "PowerCurve":
        """
        Method for sampling a cubic rise between cut-in and rated speed into a piecewise-linear curve.
        :param cut_in: Cut-in speed in m/s.
        :param rated: Rated speed in m/s.
        :param cut_out: Cut-out speed in m/s.
        :param step: Sampling step in m/s.
        :return: Power curve.
        """
        if not 0 <= cut_in < rated < cut_out:
            raise ComponentSpecException("power curve speeds must satisfy 0 <= cut-in < rated < cut-out",
                                         context=(cut_in, rated, cut_out))
        rise = np.append(np.arange(cut_in, rated, step), rated)
        fractions = (rise ** 3 - cut_in ** 3) / (rated ** 3 - cut_in ** 3)
        return cls(np.append(rise, cut_out), np.append(fractions, 1.0))


def load_power_curve(path: str) -> PowerCurve:
    """
    Function for loading a power curve CSV with header "speed_ms,fraction".
    :param path: CSV path.
    :return: Validated power curve.
    """
    frame = pd.read_csv(path)
    if list(frame.columns) != ["speed_ms", "fraction"]:
        raise ComponentSpecException(
            "power curve header must be 'speed_ms,fraction'", context=path)
    if frame.isna().any().any():
        raise ComponentSpecException(
            "power curve contains empty or non-numeric cells", context=path)
    return PowerCurve(frame["speed_ms"].to_numpy(dtype=float), frame["fraction"].to_numpy(dtype=float))


@dataclass(frozen=True)
class WindSpec(object):
    """
    Wind turbine parameters.
    """
    unit_rating_kw: float = 3.0
    hub_height_m: float = 12.0
    anemometer_height_m: float = 10.0
    shear_exponent: float = 1.0 / 7.0
    power_curve: PowerCurve = field(default_factory=PowerCurve.from_cubic)
    air_density_ref: float = STANDARD_AIR_DENSITY
    air_density: float = STANDARD_AIR_DENSITY

    def __post_init__(self) -> None:
        if not self.unit_rating_kw > 0:
            raise ComponentSpecException(
                "turbine rating must be positive", context=self.unit_rating_kw)
        if not (self.hub_height_m > 0 and self.anemometer_height_m > 0):
            raise ComponentSpecException("heights must be positive", context=(
                self.hub_height_m, self.anemometer_height_m))
        if not (self.air_density > 0 and self.air_density_ref > 0):
            raise ComponentSpecException(
                "air density must be positive", context=self.air_density)


def hub_wind_speed(u_anem: ArrayLike, z_anem: float, z_hub: float, alpha: float) -> ArrayLike:
    """
    Function for extrapolating wind speed to hub height with the power law.
    :param u_anem: Wind speed at anemometer height in m/s.
    :param z_anem: Anemometer height in m.
    :param z_hub: Hub height in m.
    :param alpha: Shear exponent.
    :return: Hub-height wind speed in m/s.
    """
    if not (z_anem > 0 and z_hub > 0):
        raise ComponentSpecException(
            "heights must be positive", context=(z_anem, z_hub))
    return u_anem * (z_hub / z_anem) ** alpha


def turbine_power(spec: WindSpec, n_units: int, u_hub: ArrayLike, rho: float = None) -> ArrayLike:
    """
    Function for calculating turbine fleet AC output, corrected by the air density ratio.
    :param spec: Turbine parameters.
    :param n_units: Number of turbines.
    :param u_hub: Hub-height wind speed in m/s.
    :param rho: Air density in kg/m³. Defaults to None in which case WindSpec.air_density is used.
    :return: Output power in kW.
    """
    rho = spec.air_density if rho is None else rho
    if not rho > 0:
        raise ComponentSpecException("air density must be positive", context=rho)
    return n_units * spec.unit_rating_kw * spec.power_curve.fraction(u_hub) * (rho / spec.air_density_ref)
