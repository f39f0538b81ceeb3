# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import math
from dataclasses import dataclass, field, asdict
from typing import List, Optional, Sequence, Tuple, Union
import pandas as pd
from src.model.exceptions import EconomicsException
from src.model.dispatch_control.system_config import SystemConfig
from src.model.dispatch_control.dispatch_engine import DispatchResult, DispatchAggregates
from src.model.economics_control.finance import (FinanceSpec, annuity_pv, discount_factor, replacement_years,
                                                 salvage_value)
from src.model.resource_control.time_series import TimeSeries


COST_COLUMNS = ("Capital", "Replacement", "O&M", "Fuel", "Salvage", "Total")
COMPONENT_ORDER = ("DG", "BT", "WT", "PV", "Converter")
SYSTEM_ROW = "System"
GRID_ROW = "Grid"


@dataclass(frozen=True)
class UnitPrice(object):
    """
    Prices of one unit (or one kW) of a component with a calendar lifetime.
    """
    capital: float
    replacement: float
    om_per_year: float
    lifetime_years: float

    def __post_init__(self) -> None:
        if min(self.capital, self.replacement, self.om_per_year) < 0:
            raise EconomicsException("prices must be nonnegative", context=self)
        if not self.lifetime_years > 0:
            raise EconomicsException("component life must be positive", context=self.lifetime_years)


@dataclass(frozen=True)
class GensetPrice(object):
    """
    Genset prices per kW of rating. O&M is billed per kW and operating hour, life and fuel price are genset
    parameters.
    """
    capital_per_kw: float = 500.0
    replacement_per_kw: float = 500.0
    om_per_kw_hour: float = 0.03

    def __post_init__(self) -> None:
        if min(self.capital_per_kw, self.replacement_per_kw, self.om_per_kw_hour) < 0:
            raise EconomicsException("prices must be nonnegative", context=self)


@dataclass(frozen=True)
class ComponentPrices(object):
    """
    Unit prices of all components.
    """
    pv: UnitPrice = field(default_factory=lambda: UnitPrice(222.7, 222.7, 4.45, 25))
    wind: UnitPrice = field(default_factory=lambda: UnitPrice(1086.0, 1086.0, 44.0, 20))
    battery: UnitPrice = field(default_factory=lambda: UnitPrice(200.0, 200.0, 2.0, 5))
    converter: UnitPrice = field(default_factory=lambda: UnitPrice(280.0, 280.0, 10.0, 25))
    genset: GensetPrice = field(default_factory=GensetPrice)


@dataclass(frozen=True)
class CostEvents(object):
    """
    Undiscounted cash flows of one component over the project.
    """
    component: str
    capital: float = 0.0
    replacement_cost: float = 0.0
    replacement_years: Tuple[float, ...] = ()
    om_per_year: float = 0.0
    fuel_per_year: float = 0.0
    salvage: float = 0.0

    def __post_init__(self) -> None:
        amounts = (self.capital, self.replacement_cost, self.om_per_year, self.fuel_per_year, self.salvage)
        if min(amounts) < 0:
            raise EconomicsException("cost amounts must be nonnegative", context=self.component)
        if self.salvage > self.replacement_cost + 1e-9:
            raise EconomicsException("salvage exceeds one replacement cost", context=self.component)


@dataclass(frozen=True)
class CostRow(object):
    """
    Present values of one component (or the system) in $.
    """
    component: str
    capital: float
    replacement: float
    om: float
    fuel: float
    salvage: float

    @property
    def total(self) -> float:
        return self.capital + self.replacement + self.om + self.fuel - self.salvage

    def values(self) -> Tuple[float, ...]:
        return self.capital, self.replacement, self.om, self.fuel, self.salvage, self.total


@dataclass(frozen=True)
class EconomicSummary(object):
    """
    Lifecycle costs of a system.
    lcoe is None if nothing is served and a summary was still requested.
    """
    rows: Tuple[CostRow, ...]
    system: CostRow
    npc: float
    lcoe: Optional[float]
    operating_cost: float
    capital: float
    crf: float
    served_kwh: float
    renewable_fraction: float

    def to_frame(self) -> pd.DataFrame:
        """
        Method for converting the cost breakdown into a data frame with one row per component and the system row.
        :return: Cost data frame.
        """
        records = [(row.component, *row.values()) for row in (*self.rows, self.system)]
        return pd.DataFrame(records, columns=["Component", *COST_COLUMNS])

    def to_dict(self) -> dict:
        return {
            "npc": self.npc,
            "lcoe": self.lcoe,
            "operating_cost": self.operating_cost,
            "capital": self.capital,
            "crf": self.crf,
            "served_kwh": self.served_kwh,
            "renewable_fraction": self.renewable_fraction,
            "rows": [{**asdict(row), "total": row.total} for row in (*self.rows, self.system)]
        }


def component_npc(events: CostEvents, fin: FinanceSpec) -> CostRow:
    """
    Function for discounting the cash flows of one component.
    :param events: Undiscounted cash flows.
    :param fin: Finance parameters.
    :return: Present-value cost row.
    """
    i = fin.real_rate
    n = fin.project_life
    return CostRow(
        component=events.component,
        capital=events.capital,
        replacement=sum(events.replacement_cost * discount_factor(i, t) for t in events.replacement_years),
        om=annuity_pv(events.om_per_year, i, n),
        fuel=annuity_pv(events.fuel_per_year, i, n),
        salvage=events.salvage * discount_factor(i, n)
    )


def _calendar_events(name: str, units: float, price: UnitPrice, fin: FinanceSpec) -> CostEvents:
    replacement_cost = units * price.replacement
    return CostEvents(
        component=name,
        capital=units * price.capital,
        replacement_cost=replacement_cost,
        replacement_years=replacement_years(price.lifetime_years, fin.project_life),
        om_per_year=units * price.om_per_year,
        salvage=salvage_value(replacement_cost, price.lifetime_years, fin.project_life)
    )


def _genset_events(config: SystemConfig, aggregates: DispatchAggregates, price: GensetPrice,
                   fin: FinanceSpec) -> CostEvents:
    """
    Internal function for genset cash flows, its lifetime counted in operating hours.
    :param config: System configuration with a genset.
    :param aggregates: Annual dispatch totals.
    :param price: Genset prices.
    :param fin: Finance parameters.
    :return: Cost events.
    """
    genset = config.genset
    runtime = float(aggregates.genset_hours)
    lifetime_years = genset.lifetime_hours / runtime if runtime > 0 else math.inf
    replacement_cost = genset.rated_kw * price.replacement_per_kw
    return CostEvents(
        component="DG",
        capital=genset.rated_kw * price.capital_per_kw,
        replacement_cost=replacement_cost,
        replacement_years=replacement_years(lifetime_years, fin.project_life),
        om_per_year=genset.rated_kw * price.om_per_kw_hour * runtime,
        fuel_per_year=aggregates.fuel_l * genset.fuel_price,
        salvage=salvage_value(replacement_cost, genset.lifetime_hours, runtime * fin.project_life)
    )


def cost_events(config: SystemConfig, aggregates: DispatchAggregates, prices: ComponentPrices,
                fin: FinanceSpec) -> List[CostEvents]:
    """
    Function for deriving the cash flows of all present components, ordered DG, BT, WT, PV, Converter.
    :param config: System configuration.
    :param aggregates: Annual dispatch totals.
    :param prices: Component prices.
    :param fin: Finance parameters.
    :return: Cost events per component.
    """
    events = []
    if config.genset is not None:
        events.append(_genset_events(config, aggregates, prices.genset, fin))
    for name, units, price in (("BT", config.n_batt, prices.battery), ("WT", config.n_wt, prices.wind),
                               ("PV", config.n_pv * config.pv.unit_rating_kw, prices.pv),
                               ("Converter", config.converter_kw, prices.converter)):
        if units > 0:
            events.append(_calendar_events(name, units, price, fin))
    return events


def summarize_rows(rows: Sequence[CostRow], served_kwh: float, fin: FinanceSpec, renewable_fraction: float = 0.0,
                   require_served: bool = True) -> EconomicSummary:
    """
    Function for assembling a summary from component rows.
    :param rows: Component cost rows.
    :param served_kwh: Annual served energy in kWh.
    :param fin: Finance parameters.
    :param renewable_fraction: Renewable fraction to echo. Defaults to 0.
    :param require_served: Flag, declaring whether zero served energy is an error. Defaults to True.
    :return: Economic summary.
    """
    rows = tuple(rows)
    system = CostRow(SYSTEM_ROW, *(sum(getattr(row, name) for row in rows)
                                   for name in ("capital", "replacement", "om", "fuel", "salvage")))
    npc = sum(row.total for row in rows)
    factor = fin.crf
    if served_kwh > 0:
        lcoe = npc * factor / served_kwh
    elif require_served:
        raise EconomicsException("zero served energy, LCOE undefined", context=served_kwh)
    else:
        lcoe = None
    return EconomicSummary(rows=rows, system=system, npc=npc, lcoe=lcoe,
                           operating_cost=(npc - system.capital) * factor, capital=system.capital, crf=factor,
                           served_kwh=served_kwh, renewable_fraction=renewable_fraction)


def system_summary(config: SystemConfig, dispatch: Union[DispatchResult, DispatchAggregates],
                   prices: ComponentPrices, fin: FinanceSpec, require_served: bool = True) -> EconomicSummary:
    """
    Function for calculating the lifecycle costs of a simulated system.
    :param config: System configuration.
    :param dispatch: Dispatch result or its aggregates.
    :param prices: Component prices.
    :param fin: Finance parameters.
    :param require_served: Flag, declaring whether zero served energy is an error. Defaults to True.
    :return: Economic summary.
    """
    aggregates = dispatch.aggregates if isinstance(dispatch, DispatchResult) else dispatch
    rows = [component_npc(events, fin) for events in cost_events(config, aggregates, prices, fin)]
    return summarize_rows(rows, aggregates.served_kwh, fin, aggregates.renewable_fraction, require_served)


def baseline_grid(load: TimeSeries, tariff: float, fin: FinanceSpec) -> EconomicSummary:
    """
    Function for the cost of serving the whole load from the grid at a flat tariff.
    :param load: Hourly load.
    :param tariff: Tariff in $/kWh.
    :param fin: Finance parameters.
    :return: Economic summary with a single grid row, purchases booked as O&M.
    """
    if tariff < 0:
        raise EconomicsException("tariff must be nonnegative", context=tariff)
    served_kwh = float(load.values.sum())
    purchases = served_kwh * tariff
    row = component_npc(CostEvents(GRID_ROW, om_per_year=purchases), fin)
    summary = summarize_rows([row], served_kwh, fin, 0.0, require_served=False)
    return EconomicSummary(rows=summary.rows, system=summary.system, npc=summary.npc, lcoe=tariff,
                           operating_cost=purchases, capital=0.0, crf=summary.crf, served_kwh=served_kwh,
                           renewable_fraction=0.0)


def cost_shares(summary: EconomicSummary) -> pd.DataFrame:
    """
    Function for the share of each component in the net present cost.
    :param summary: Economic summary.
    :return: Data frame with columns component, total, share.
    """
    records = [(row.component, row.total, row.total / summary.npc if summary.npc else 0.0) for row in summary.rows]
    return pd.DataFrame(records, columns=["component", "total", "share"])
