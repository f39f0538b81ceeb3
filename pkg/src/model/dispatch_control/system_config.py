# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Optional, Tuple
from src.model.exceptions import ComponentSpecException
from src.model.component_control.pv_model import PvSpec
from src.model.component_control.wind_model import WindSpec
from src.model.component_control.battery_model import BatterySpec
from src.model.component_control.genset_model import GensetSpec
from src.model.component_control.converter_model import ConverterSpec


class Strategy(str, Enum):
    """
    Dispatch strategy.
    """
    LOAD_FOLLOWING = "lf"
    CYCLE_CHARGING = "cc"


SIZING_FIELDS = ("n_pv", "n_wt", "n_batt", "genset_kw", "converter_kw")


@dataclass(frozen=True)
class SystemConfig(object):
    """
    Component fleet of a candidate system.
    PV and battery sit on the DC bus; wind turbines, genset and load on the AC bus; the converter links both.
    The genset and converter templates carry all parameters except the rating, which is taken from
    genset_kw and converter_kw.
    """
    n_pv: int = 0
    n_wt: int = 0
    n_batt: int = 0
    genset_kw: float = 0.0
    converter_kw: float = 0.0
    pv: PvSpec = field(default_factory=PvSpec)
    wind: WindSpec = field(default_factory=WindSpec)
    battery: BatterySpec = field(default_factory=BatterySpec)
    genset_template: GensetSpec = field(
        default_factory=lambda: GensetSpec(rated_kw=1.0))
    converter_template: ConverterSpec = field(default_factory=ConverterSpec)
    strategy: Strategy = Strategy.LOAD_FOLLOWING

    def __post_init__(self) -> None:
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        for name in ("n_pv", "n_wt", "n_batt"):
            value = getattr(self, name)
            if int(value) != value or value < 0:
                raise ComponentSpecException(
                    f"{name} must be a nonnegative integer", context=value)
            object.__setattr__(self, name, int(value))
        for name in ("genset_kw", "converter_kw"):
            if getattr(self, name) < 0:
                raise ComponentSpecException(
                    f"{name} must be nonnegative", context=getattr(self, name))

    @cached_property
    def genset(self) -> Optional[GensetSpec]:
        """
        Genset of the fleet, None if the fleet has no genset.
        """
        return replace(self.genset_template, rated_kw=self.genset_kw) if self.genset_kw > 0 else None

    @cached_property
    def converter(self) -> ConverterSpec:
        return replace(self.converter_template, rated_kw=self.converter_kw)

    def sizing_key(self) -> Tuple[int, int, int, float, float]:
        """
        Method for getting the sizing tuple, used for lexicographic ordering.
        :return: (n_pv, n_wt, n_batt, genset_kw, converter_kw).
        """
        return tuple(getattr(self, name) for name in SIZING_FIELDS)

    def resized(self, **sizing: float) -> "SystemConfig":
        """
        Method for deriving a configuration with other component sizes.
        :param sizing: Sizing fields to replace.
        :return: New configuration.
        """
        return replace(self, **sizing)
