# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass
from typing import Tuple
from src.model.exceptions import ComponentSpecException


@dataclass(frozen=True)
class GensetSpec(object):
    """
    Diesel generator parameters with an affine fuel curve:
    fuel [L/h] = fuel_intercept * rated_kw + fuel_slope * output_kw while running.
    """
    rated_kw: float
    min_load_ratio: float = 0.25
    fuel_intercept: float = 0.08145
    fuel_slope: float = 0.246
    lifetime_hours: float = 15000.0
    fuel_price: float = 0.168

    def __post_init__(self) -> None:
        if not self.rated_kw > 0:
            raise ComponentSpecException(
                "genset rating must be positive", context=self.rated_kw)
        if not 0 <= self.min_load_ratio < 1:
            raise ComponentSpecException(
                "genset minimum load ratio must lie in [0, 1)", context=self.min_load_ratio)
        if self.fuel_intercept < 0 or self.fuel_slope < 0:
            raise ComponentSpecException("fuel curve coefficients must be nonnegative",
                                         context=(self.fuel_intercept, self.fuel_slope))
        if not self.lifetime_hours > 0:
            raise ComponentSpecException(
                "genset lifetime must be positive", context=self.lifetime_hours)

    @property
    def min_load_kw(self) -> float:
        return self.min_load_ratio * self.rated_kw

    def fuel_lph(self, output_kw: float) -> float:
        """
        Method for evaluating the fuel curve of a running genset.
        :param output_kw: Electrical output in kW.
        :return: Fuel consumption in L/h.
        """
        return self.fuel_intercept * self.rated_kw + self.fuel_slope * output_kw


def genset_step(spec: GensetSpec, requested_kw: float) -> Tuple[float, float, bool]:
    """
    Function for operating the genset for one hour at a requested setpoint.
    :param spec: Genset parameters.
    :param requested_kw: Requested output in kW, zero switches the genset off.
    :return: Tuple of delivered power in kW, fuel consumption in L/h and running flag.
    """
    if requested_kw <= 0:
        return 0.0, 0.0, False
    delivered = min(max(requested_kw, spec.min_load_kw), spec.rated_kw)
    return delivered, spec.fuel_lph(delivered), True
