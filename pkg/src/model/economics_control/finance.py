# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import math
from dataclasses import dataclass
from typing import Tuple
from src.model.exceptions import EconomicsException


def real_rate(nominal: float, inflation: float) -> float:
    """
    Function for deriving the real discount rate from the nominal rate and expected inflation.
    :param nominal: Nominal discount rate per year.
    :param inflation: Expected inflation rate per year, above -1.
    :return: Real discount rate per year.
    """
    if inflation <= -1:
        raise EconomicsException("inflation must be above -1", context=inflation)
    return (1.0 + nominal) / (1.0 + inflation) - 1.0


def crf(i: float, n: float) -> float:
    """
    Function for calculating the capital recovery factor.
    :param i: Real discount rate per year.
    :param n: Number of years, at least 1.
    :return: Capital recovery factor.
    """
    if n < 1:
        raise EconomicsException("annuity period must be at least one year", context=n)
    if i < 0:
        raise EconomicsException("discount rate must be nonnegative", context=i)
    if i == 0:
        return 1.0 / n
    growth = (1.0 + i) ** n
    return i * growth / (growth - 1.0)


def annuity_pv(amount: float, i: float, n: float) -> float:
    """
    Function for discounting a level annual amount paid at the end of years 1..n.
    :param amount: Annual amount.
    :param i: Real discount rate per year.
    :param n: Number of years.
    :return: Present value.
    """
    return amount / crf(i, n)


def discount_factor(i: float, t: float) -> float:
    return (1.0 + i) ** -t


def replacement_years(lifetime_years: float, project_life: float) -> Tuple[float, ...]:
    """
    Function for scheduling replacements of a component installed at year 0.
    A replacement falling exactly on the project end is not bought.
    :param lifetime_years: Component lifetime in years, infinite for unused components.
    :param project_life: Project lifetime in years.
    :return: Replacement years.
    """
    if not lifetime_years > 0:
        raise EconomicsException("component life must be positive", context=lifetime_years)
    if math.isinf(lifetime_years):
        return tuple()
    count = math.ceil(project_life / lifetime_years - 1e-9) - 1
    return tuple(lifetime_years * k for k in range(1, count + 1))


def salvage_value(replacement_cost: float, component_life: float, usage: float) -> float:
    """
    Function for calculating the undiscounted salvage value at project end.
    The remaining life is the component life minus the age of the last installed unit.
    :param replacement_cost: Replacement cost of the component.
    :param component_life: Component life in years or operating hours.
    :param usage: Life consumed at project end in the same unit, e.g. project years or total runtime hours.
    :return: Salvage value.
    """
    if not component_life > 0:
        raise EconomicsException("component life must be positive", context=component_life)
    if usage < 0:
        raise EconomicsException("usage must be nonnegative", context=usage)
    if usage == 0:
        return replacement_cost
    installs = math.ceil(usage / component_life - 1e-9)
    age = usage - component_life * (installs - 1)
    remaining = max(0.0, component_life - age)
    return replacement_cost * remaining / component_life


@dataclass(frozen=True)
class FinanceSpec(object):
    """
    Project finance parameters. Cash flows are in constant currency and discounted at the real rate.
    """
    nominal_rate: float = 0.0812
    inflation: float = 0.02
    project_life: int = 25

    def __post_init__(self) -> None:
        if self.inflation <= -1:
            raise EconomicsException("inflation must be above -1", context=self.inflation)
        if not self.project_life >= 1:
            raise EconomicsException("project life must be at least one year", context=self.project_life)
        if self.real_rate < 0:
            raise EconomicsException("real discount rate must be nonnegative", context=self.real_rate)

    @property
    def real_rate(self) -> float:
        return real_rate(self.nominal_rate, self.inflation)

    @property
    def crf(self) -> float:
        return crf(self.real_rate, self.project_life)
