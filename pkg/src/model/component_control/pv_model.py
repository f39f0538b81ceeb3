# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass
from typing import Union
import numpy as np
from src.model.exceptions import ComponentSpecException


ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class PvSpec(object):
    """
    PV module parameters. Unit counts are held by the system configuration.
    """
    unit_rating_kw: float = 1.0
    derating: float = 0.9
    temp_coeff: float = -0.0034
    noct: float = 43.0
    t_c_stc: float = 25.0
    g_stc: float = 1.0

    def __post_init__(self) -> None:
        if not self.unit_rating_kw > 0:
            raise ComponentSpecException(
                "PV unit rating must be positive", context=self.unit_rating_kw)
        if not 0 < self.derating <= 1:
            raise ComponentSpecException(
                "PV derating factor must lie in (0, 1]", context=self.derating)
        if self.g_stc != 1.0:
            raise ComponentSpecException(
                "PV STC irradiance must be 1 kW/m²", context=self.g_stc)
        if not 40 <= self.noct <= 50:
            raise ComponentSpecException(
                "NOCT must lie in [40, 50] °C", context=self.noct)


def pv_cell_temperature(t_a: ArrayLike, noct: float, g_t: ArrayLike) -> ArrayLike:
    """
    Function for calculating the PV cell temperature from ambient temperature and irradiance.
    :param t_a: Ambient temperature in °C.
    :param noct: Nominal operating cell temperature in °C.
    :param g_t: Irradiance on the array in W/m².
    :return: Cell temperature in °C.
    """
    return t_a + ((noct - 20.0) / 800.0) * g_t


def pv_power(spec: PvSpec, n_units: int, g_t: ArrayLike, t_a: ArrayLike) -> ArrayLike:
    """
    Function for calculating PV array DC output.
    :param spec: PV parameters.
    :param n_units: Number of PV units.
    :param g_t: Irradiance on the array in kW/m².
    :param t_a: Ambient temperature in °C.
    :return: Output power in kW, never negative.
    """
    t_c = pv_cell_temperature(t_a, spec.noct, np.multiply(g_t, 1000.0))
    power = n_units * spec.unit_rating_kw * spec.derating * (np.divide(g_t, spec.g_stc)) * (
        1.0 + spec.temp_coeff * (t_c - spec.t_c_stc))
    return np.maximum(power, 0.0)
