# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping
from dotenv import dotenv_values
from src.model.exceptions import ConfigurationException, EmissionsException


class Species(str, Enum):
    CO2 = "CO2"
    CO = "CO"
    UHC = "UHC"
    PM = "PM"
    SO2 = "SO2"
    NOX = "NOx"


class Source(str, Enum):
    GENSET = "genset"
    GRID = "grid"


DEFAULT_GENSET_FACTORS = {
    Species.CO2: 2.618,
    Species.CO: 0.0165,
    Species.UHC: 0.00072,
    Species.PM: 0.00010,
    Species.SO2: 0.00641,
    Species.NOX: 0.01551
}
DEFAULT_GRID_FACTORS = {
    Species.CO2: 0.632,
    Species.SO2: 0.00274,
    Species.NOX: 0.00134
}


def _complete(factors: Mapping) -> Dict[Species, float]:
    return {species: float(factors.get(species, 0.0)) for species in Species}


@dataclass(frozen=True)
class EmissionFactors(object):
    """
    Emission factors in kg per liter of diesel (genset) and kg per kWh purchased (grid).
    Species without a factor emit nothing.
    """
    genset: Dict[Species, float] = field(default_factory=lambda: dict(DEFAULT_GENSET_FACTORS))
    grid: Dict[Species, float] = field(default_factory=lambda: dict(DEFAULT_GRID_FACTORS))

    def __post_init__(self) -> None:
        for source in Source:
            factors = _complete({Species(key): value for key, value in getattr(self, source.value).items()})
            for species, value in factors.items():
                if value < 0:
                    raise ConfigurationException(f"emissions.{source.value}.{species.value}",
                                                 "emission factor must be nonnegative")
            object.__setattr__(self, source.value, factors)


@dataclass(frozen=True)
class EmissionsReport(object):
    """
    Annual emissions in kg per species, attributed to genset and grid.
    """
    genset: Dict[Species, float] = field(default_factory=lambda: _complete({}))
    grid: Dict[Species, float] = field(default_factory=lambda: _complete({}))

    @property
    def total(self) -> Dict[Species, float]:
        return {species: self.genset[species] + self.grid[species] for species in Species}

    def __add__(self, other: "EmissionsReport") -> "EmissionsReport":
        return EmissionsReport(
            genset={species: self.genset[species] + other.genset[species] for species in Species},
            grid={species: self.grid[species] + other.grid[species] for species in Species})

    def is_zero(self) -> bool:
        return all(value == 0 for value in self.total.values())

    def to_dict(self) -> dict:
        """
        Method for converting the report into a JSON-ready dictionary.
        :return: Dictionary of kg/yr per source and species.
        """
        return {
            "unit": "kg/yr",
            "genset": {species.value: value for species, value in self.genset.items()},
            "grid": {species.value: value for species, value in self.grid.items()},
            "total": {species.value: value for species, value in self.total.items()}
        }


def genset_emissions(fuel_l_per_year: float, factors: EmissionFactors) -> EmissionsReport:
    """
    Function for calculating emissions of burnt diesel.
    :param fuel_l_per_year: Annual fuel consumption in L.
    :param factors: Emission factors.
    :return: Emissions report.
    """
    if fuel_l_per_year < 0:
        raise EmissionsException("fuel consumption must be nonnegative", context=fuel_l_per_year)
    return EmissionsReport(genset={species: fuel_l_per_year * factor for species, factor in factors.genset.items()})


def grid_emissions(kwh_per_year: float, factors: EmissionFactors) -> EmissionsReport:
    """
    Function for calculating emissions of purchased grid energy.
    :param kwh_per_year: Annual purchased energy in kWh.
    :param factors: Emission factors.
    :return: Emissions report.
    """
    if kwh_per_year < 0:
        raise EmissionsException("grid energy must be nonnegative", context=kwh_per_year)
    return EmissionsReport(grid={species: kwh_per_year * factor for species, factor in factors.grid.items()})


def load_emission_factors(path: str) -> EmissionFactors:
    """
    Function for loading emission factors from a flat KEY=value file, keys named <SOURCE>_<SPECIES>,
    e.g. GENSET_CO2=2.618 or GRID_NOX=0.00134.
    :param path: Path to the factors file.
    :return: Emission factors, missing keys emit nothing.
    """
    factors = {Source.GENSET: {}, Source.GRID: {}}
    lookup = {f"{source.name}_{species.name}": (source, species) for source in Source for species in Species}
    for key, value in dotenv_values(path).items():
        if key.upper() not in lookup:
            raise ConfigurationException(f"emissions.{key}", "unknown emission factor key")
        source, species = lookup[key.upper()]
        try:
            factors[source][species] = float(value)
        except (TypeError, ValueError):
            raise ConfigurationException(f"emissions.{key}", "emission factor must be numeric")
    return EmissionFactors(genset=factors[Source.GENSET], grid=factors[Source.GRID])
