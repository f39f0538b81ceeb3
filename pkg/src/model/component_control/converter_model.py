# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass
from enum import Enum
from src.model.exceptions import ComponentSpecException


class Direction(str, Enum):
    DC_TO_AC = "dc_to_ac"
    AC_TO_DC = "ac_to_dc"


@dataclass(frozen=True)
class ConverterSpec(object):
    """
    Bidirectional converter with equal inverter and rectifier efficiency.
    """
    rated_kw: float = 0.0
    efficiency: float = 0.97

    def __post_init__(self) -> None:
        if self.rated_kw < 0:
            raise ComponentSpecException(
                "converter rating must be nonnegative", context=self.rated_kw)
        if not 0 < self.efficiency <= 1:
            raise ComponentSpecException(
                "converter efficiency must lie in (0, 1]", context=self.efficiency)


def converter_flow(spec: ConverterSpec, direction: Direction, offered_kw: float) -> float:
    """
    Function for passing power through the converter.
    Input above the rating is not taken; the surplus remains on the source side.
    :param spec: Converter parameters.
    :param direction: Flow direction.
    :param offered_kw: Offered input power in kW.
    :return: Delivered output power in kW.
    """
    Direction(direction)
    return min(max(offered_kw, 0.0), spec.rated_kw) * spec.efficiency


def converter_sizing_hint(peak_load_kw: float, efficiency: float) -> float:
    """
    Function for the converter rating that lets the DC bus serve a peak load on its own.
    :param peak_load_kw: Peak AC load in kW.
    :param efficiency: Converter efficiency in (0, 1].
    :return: Converter rating in kW.
    """
    if not 0 < efficiency <= 1:
        raise ComponentSpecException(
            "converter efficiency must lie in (0, 1]", context=efficiency)
    if peak_load_kw < 0:
        raise ComponentSpecException(
            "peak load must be nonnegative", context=peak_load_kw)
    return peak_load_kw / efficiency
