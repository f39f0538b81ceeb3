# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import copy
import json
import logging
import os
from typing import Any, List, Optional
from src.configuration import configuration as cfg
from src.model.exceptions import ConfigurationException, HybridSizerException
from src.model.component_control.pv_model import PvSpec
from src.model.component_control.wind_model import WindSpec, PowerCurve, load_power_curve
from src.model.component_control.battery_model import BatterySpec
from src.model.component_control.genset_model import GensetSpec
from src.model.component_control.converter_model import ConverterSpec
from src.model.dispatch_control.system_config import SystemConfig, Strategy, SIZING_FIELDS
from src.model.economics_control.finance import FinanceSpec
from src.model.economics_control.costing import ComponentPrices, UnitPrice, GensetPrice
from src.model.emissions_control.emissions import EmissionFactors, load_emission_factors
from src.model.optimization_control.search_space import SearchSpace, Constraints
from src.utility.bronze import dictionary_utility, hashing_utility, json_utility
from src.utility.silver import file_system_utility


RESOURCE_SOURCES = ("synth", "csv", "nasa")
LOAD_SOURCES = ("synth", "csv")
SEARCH_METHODS = ("exhaustive", "local")

DEFAULT_SCENARIO = {
    "name": "default",
    "description": "",
    "seed": cfg.DEFAULT_SEED,
    "site": {"name": "Khobar", "latitude": 26.3508, "longitude": 50.2123},
    "finance": {"nominal_rate": 0.0812, "inflation": 0.02, "project_life": 25},
    "components": {
        "pv": {"unit_rating_kw": 1.0, "derating": 0.9, "temp_coeff": -0.0034, "noct": 43.0,
               "capital": 222.7, "replacement": 222.7, "om_per_year": 4.45, "lifetime_years": 25},
        "wind": {"unit_rating_kw": 3.0, "hub_height_m": 12.0, "anemometer_height_m": 10.0,
                 "shear_exponent": 1.0 / 7.0, "power_curve": None,
                 "cut_in_ms": 3.0, "rated_speed_ms": 12.0, "cut_out_ms": 24.0, "air_density": 1.225,
                 "capital": 1086.0, "replacement": 1086.0, "om_per_year": 44.0, "lifetime_years": 20},
        "battery": {"unit_capacity_kwh": 2.0, "nominal_voltage": 12.0, "roundtrip_eff": 0.97,
                    "soc_min": 0.2, "soc_max": 1.0, "self_discharge": 0.0, "max_charge_rate_kw": 2.0,
                    "max_discharge_rate_kw": 2.0, "initial_soc": None,
                    "capital": 200.0, "replacement": 200.0, "om_per_year": 2.0, "lifetime_years": 5},
        "genset": {"min_load_ratio": 0.25, "fuel_intercept": 0.08145, "fuel_slope": 0.246,
                   "lifetime_hours": 15000.0, "fuel_price": 0.168,
                   "capital_per_kw": 500.0, "replacement_per_kw": 500.0, "om_per_kw_hour": 0.03},
        "converter": {"efficiency": 0.97, "capital": 280.0, "replacement": 280.0, "om_per_year": 10.0,
                      "lifetime_years": 25}
    },
    "fleet": {"n_pv": 0, "n_wt": 0, "n_batt": 0, "genset_kw": 0.0, "converter_kw": 0.0},
    "resources": {
        "source": "synth",
        "profile": None,
        "shapes": None,
        "ghi_csv": None,
        "wind_csv": None,
        "temperature_csv": None,
        "ghi_annual_kwh_m2_day": 5.6,
        "wind_annual_ms": 5.61,
        "ghi_shape": "solar",
        "wind_shape": "flat",
        "temperature_shape": "flat",
        "ghi_day_variability": 0.15,
        "wind_day_variability": 0.3,
        "temperature_day_variability": 0.0
    },
    "load": {
        "source": "synth",
        "csv": None,
        "avg_daily_kwh": 2424.2,
        "peak_kw": 390.41,
        "shape": "ev_charging",
        "day_variability": 0.05,
        "monthly_factors": None
    },
    "dispatch": {"strategy": Strategy.LOAD_FOLLOWING.value},
    "constraints": {"max_unmet_fraction": 0.0, "min_renewable_fraction": 0.0},
    "search_space": {"n_pv": None, "n_wt": None, "n_batt": None, "genset_kw": None, "converter_kw": None,
                     "method": "exhaustive", "workers": 1},
    "grid": {"tariff": 0.16},
    "emissions": {"factors": None},
    "output": {"directory": "output"}
}
# Paths whose files must exist when set, relative paths resolve against the scenario file.
FILE_FIELDS = ("resources.profile", "resources.shapes", "resources.ghi_csv", "resources.wind_csv",
               "resources.temperature_csv", "load.csv", "components.wind.power_curve", "emissions.factors")
# Unset references fall back to shipped data files.
SHIPPED_FILES = {
    "resources.profile": cfg.PATHS.KHOBAR_PROFILE_FILE,
    "resources.shapes": cfg.PATHS.DAILY_SHAPES_FILE
}


def _fail(field: str, message: str) -> None:
    raise ConfigurationException(field, message)


def _extract(data: dict, field: str) -> Any:
    try:
        return dictionary_utility.extract_nested_value(data, field)
    except (KeyError, TypeError):
        _fail(field, "missing or malformed section")


def _check_number(data: dict, field: str, minimum: float = None, maximum: float = None, integer: bool = False,
                  optional: bool = False, exclusive_minimum: bool = False) -> None:
    """
    Function for type and range checking a numeric field.
    :param data: Scenario data.
    :param field: Dotted field path.
    :param minimum: Lower bound. Defaults to None.
    :param maximum: Upper bound. Defaults to None.
    :param integer: Flag, declaring whether the value must be integral. Defaults to False.
    :param optional: Flag, declaring whether null is allowed. Defaults to False.
    :param exclusive_minimum: Flag, declaring whether the lower bound is exclusive. Defaults to False.
    """
    value = _extract(data, field)
    if value is None and optional:
        return
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(field, "expected a number")
    if integer and int(value) != value:
        _fail(field, "expected an integer")
    if minimum is not None and (value <= minimum if exclusive_minimum else value < minimum):
        _fail(field, f"must be {'>' if exclusive_minimum else '>='} {minimum}")
    if maximum is not None and value > maximum:
        _fail(field, f"must be <= {maximum}")


def _check_choice(data: dict, field: str, choices: tuple) -> None:
    if _extract(data, field) not in choices:
        _fail(field, f"must be one of {', '.join(choices)}")


def validate_scenario(data: dict) -> None:
    """
    Function for validating merged scenario data before any computation.
    :param data: Scenario data, merged over the defaults.
    """
    for section, default in (*DEFAULT_SCENARIO.items(), *((f"components.{name}", entry) for name, entry
                                                          in DEFAULT_SCENARIO["components"].items())):
        if isinstance(default, dict) and not isinstance(_extract(data, section), dict):
            _fail(section, "expected an object")
    _check_number(data, "seed", minimum=0, integer=True)
    _check_number(data, "site.latitude", minimum=-90, maximum=90)
    _check_number(data, "site.longitude", minimum=-180, maximum=180)
    _check_number(data, "finance.nominal_rate", minimum=0)
    _check_number(data, "finance.inflation", minimum=-1, exclusive_minimum=True)
    _check_number(data, "finance.project_life", minimum=1, integer=True)
    for field in ("n_pv", "n_wt", "n_batt"):
        _check_number(data, f"fleet.{field}", minimum=0, integer=True)
    for field in ("genset_kw", "converter_kw"):
        _check_number(data, f"fleet.{field}", minimum=0)
    for component, prices in (("pv", ("capital", "replacement", "om_per_year")),
                              ("wind", ("capital", "replacement", "om_per_year")),
                              ("battery", ("capital", "replacement", "om_per_year")),
                              ("converter", ("capital", "replacement", "om_per_year")),
                              ("genset", ("capital_per_kw", "replacement_per_kw", "om_per_kw_hour", "fuel_price"))):
        for price in prices:
            _check_number(data, f"components.{component}.{price}", minimum=0)
        if component != "genset":
            _check_number(data, f"components.{component}.lifetime_years", minimum=0, exclusive_minimum=True)
    _check_number(data, "components.battery.initial_soc", minimum=0, maximum=1, optional=True)
    _check_choice(data, "resources.source", RESOURCE_SOURCES)
    _check_choice(data, "load.source", LOAD_SOURCES)
    _check_choice(data, "dispatch.strategy", tuple(strategy.value for strategy in Strategy))
    _check_choice(data, "search_space.method", SEARCH_METHODS)
    _check_number(data, "search_space.workers", minimum=1, integer=True)
    for field in ("ghi_day_variability", "wind_day_variability", "temperature_day_variability"):
        _check_number(data, f"resources.{field}", minimum=0, maximum=0.99)
    _check_number(data, "resources.ghi_annual_kwh_m2_day", minimum=0, optional=True)
    _check_number(data, "resources.wind_annual_ms", minimum=0, optional=True)
    _check_number(data, "load.avg_daily_kwh", minimum=0, exclusive_minimum=True)
    _check_number(data, "load.peak_kw", minimum=0, exclusive_minimum=True)
    _check_number(data, "load.day_variability", minimum=0, maximum=0.99)
    factors = data["load"]["monthly_factors"]
    if factors is not None and (not isinstance(factors, list) or len(factors) != 12 or not all(
            isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0 for value in factors)):
        _fail("load.monthly_factors", "expected 12 positive numbers")
    _check_number(data, "constraints.max_unmet_fraction", minimum=0, maximum=1)
    _check_number(data, "constraints.min_renewable_fraction", minimum=0, maximum=1)
    _check_number(data, "grid.tariff", minimum=0)
    for dimension in SIZING_FIELDS:
        values = data["search_space"][dimension]
        if values is not None and (not isinstance(values, list) or not all(
                isinstance(value, (int, float)) and not isinstance(value, bool) for value in values)):
            _fail(f"search_space.{dimension}", "expected a list of numbers")
    if data["resources"]["source"] == "csv":
        for field in ("ghi_csv", "wind_csv", "temperature_csv"):
            if data["resources"][field] is None:
                _fail(f"resources.{field}", "required for csv resources")
    if data["load"]["source"] == "csv" and data["load"]["csv"] is None:
        _fail("load.csv", "required for csv load")
    if not isinstance(data["output"]["directory"], str):
        _fail("output.directory", "expected a path")


class ScenarioConfig(object):
    """
    Class, representing a validated scenario configuration.
    """

    def __init__(self, data: dict, source_path: Optional[str] = None) -> None:
        """
        Initiation method for scenario configurations.
        :param data: Scenario data, partial data is merged over the defaults.
        :param source_path: Path of the scenario file, used to resolve relative file references.
            Defaults to None in which case references resolve against the shipped scenario folder.
        """
        if not isinstance(data, dict):
            _fail("<root>", "scenario must be a JSON object")
        unknown = dictionary_utility.find_unknown_paths(DEFAULT_SCENARIO, data)
        if unknown:
            _fail(unknown[0], "unknown key")
        self.source_path = source_path if source_path is not None else os.path.join(cfg.PATHS.SCENARIO_PATH,
                                                                                    "scenario.json")
        self.data = dictionary_utility.merge_data(DEFAULT_SCENARIO, data)
        validate_scenario(self.data)
        for field in FILE_FIELDS:
            path = self.resolve(field)
            if path is not None and not os.path.isfile(path):
                _fail(field, f"referenced file does not exist: {file_system_utility.clean_path(path)}")
        self._specs = self._build_specs()

    @classmethod
    def from_file(cls, path: str) -> "ScenarioConfig":
        """
        Method for loading a scenario file.
        :param path: Path to the JSON scenario file.
        :return: Scenario configuration.
        """
        if not os.path.isfile(path):
            _fail("<file>", f"scenario file does not exist: {path}")
        try:
            data = json_utility.load(path)
        except (json.JSONDecodeError, UnicodeDecodeError) as ex:
            raise ConfigurationException("<file>", f"scenario file is not valid JSON: {ex}") from ex
        return cls(data, path)

    def to_dict(self) -> dict:
        return copy.deepcopy(self.data)

    def to_json(self) -> str:
        return json_utility.dumps(self.data)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScenarioConfig) and self.data == other.data

    def digest(self) -> str:
        """
        Method for getting the SHA-256 digest of the effective configuration.
        :return: Hex digest.
        """
        return hashing_utility.hash_data_with_sha256(self.data)

    def get(self, field: str) -> Any:
        return dictionary_utility.extract_nested_value(self.data, field)

    def resolve(self, field: str) -> Optional[str]:
        """
        Method for resolving a file reference.
        :param field: Dotted field path of the reference.
        :return: Absolute path, the shipped default or None if unset.
        """
        value = self.get(field)
        if value is None:
            return SHIPPED_FILES.get(field)
        if not isinstance(value, str):
            _fail(field, "expected a path")
        return file_system_utility.resolve_relative_path(value, self.source_path)

    def _build_specs(self) -> dict:
        """
        Internal method for building component specs, converting spec errors into configuration errors.
        :return: Dictionary of specs.
        """
        components = self.data["components"]
        specs = {}
        try:
            field = "components.pv"
            pv = components["pv"]
            specs["pv"] = PvSpec(unit_rating_kw=pv["unit_rating_kw"], derating=pv["derating"],
                                 temp_coeff=pv["temp_coeff"], noct=pv["noct"])
            field = "components.wind"
            wind = components["wind"]
            curve_path = self.resolve("components.wind.power_curve")
            curve = load_power_curve(curve_path) if curve_path else PowerCurve.from_cubic(
                wind["cut_in_ms"], wind["rated_speed_ms"], wind["cut_out_ms"])
            specs["wind"] = WindSpec(unit_rating_kw=wind["unit_rating_kw"], hub_height_m=wind["hub_height_m"],
                                     anemometer_height_m=wind["anemometer_height_m"],
                                     shear_exponent=wind["shear_exponent"], power_curve=curve,
                                     air_density=wind["air_density"])
            field = "components.battery"
            battery = components["battery"]
            specs["battery"] = BatterySpec(**{key: battery[key] for key in (
                "unit_capacity_kwh", "nominal_voltage", "roundtrip_eff", "soc_min", "soc_max", "self_discharge",
                "max_charge_rate_kw", "max_discharge_rate_kw")})
            initial_soc = battery["initial_soc"]
            if initial_soc is not None and not battery["soc_min"] <= initial_soc <= battery["soc_max"]:
                _fail("components.battery.initial_soc", "must lie within the SOC window")
            field = "components.genset"
            genset = components["genset"]
            specs["genset"] = GensetSpec(rated_kw=1.0, **{key: genset[key] for key in (
                "min_load_ratio", "fuel_intercept", "fuel_slope", "lifetime_hours", "fuel_price")})
            field = "components.converter"
            specs["converter"] = ConverterSpec(efficiency=components["converter"]["efficiency"])
            field = "emissions.factors"
            factors_path = self.resolve("emissions.factors")
            specs["emissions"] = load_emission_factors(factors_path) if factors_path else EmissionFactors()
        except ConfigurationException:
            raise
        except (HybridSizerException, KeyError, TypeError, ValueError) as ex:
            raise ConfigurationException(field, str(ex)) from ex
        return specs

    def system_config(self, strategy: str = None) -> SystemConfig:
        """
        Method for building the fleet configuration.
        :param strategy: Strategy override. Defaults to None in which case the scenario's strategy is used.
        :return: System configuration.
        """
        fleet = self.data["fleet"]
        return SystemConfig(n_pv=fleet["n_pv"], n_wt=fleet["n_wt"], n_batt=fleet["n_batt"],
                            genset_kw=float(fleet["genset_kw"]), converter_kw=float(fleet["converter_kw"]),
                            pv=self._specs["pv"], wind=self._specs["wind"], battery=self._specs["battery"],
                            genset_template=self._specs["genset"], converter_template=self._specs["converter"],
                            strategy=Strategy(strategy or self.data["dispatch"]["strategy"]))

    def prices(self) -> ComponentPrices:
        components = self.data["components"]

        def unit_price(name: str) -> UnitPrice:
            entry = components[name]
            return UnitPrice(entry["capital"], entry["replacement"], entry["om_per_year"], entry["lifetime_years"])
        genset = components["genset"]
        return ComponentPrices(pv=unit_price("pv"), wind=unit_price("wind"), battery=unit_price("battery"),
                               converter=unit_price("converter"),
                               genset=GensetPrice(genset["capital_per_kw"], genset["replacement_per_kw"],
                                                  genset["om_per_kw_hour"]))

    def finance(self) -> FinanceSpec:
        return FinanceSpec(**self.data["finance"])

    def constraints(self) -> Constraints:
        return Constraints(**self.data["constraints"])

    def emission_factors(self) -> EmissionFactors:
        return self._specs["emissions"]

    def search_space(self) -> SearchSpace:
        """
        Method for building the search space, unset dimensions are pinned to the fleet size.
        :return: Search space.
        """
        dimensions = {}
        for dimension in SIZING_FIELDS:
            values = self.data["search_space"][dimension]
            dimensions[dimension] = tuple(values) if values is not None else (self.data["fleet"][dimension],)
        return SearchSpace(**dimensions)

    @property
    def initial_soc(self) -> Optional[float]:
        return self.data["components"]["battery"]["initial_soc"]

    @property
    def seed(self) -> int:
        return int(self.data["seed"])

    def output_directory(self, override: str = None) -> str:
        """
        Method for determining the output directory.
        Precedence: explicit override, HYBRID_SIZER_OUTPUT_DIR, scenario setting relative to the working directory.
        :param override: Explicit directory. Defaults to None.
        :return: Output directory.
        """
        return override or cfg.get_environment_value("HYBRID_SIZER_OUTPUT_DIR") or self.data["output"]["directory"]


def load_scenario(path: str) -> ScenarioConfig:
    """
    Function for loading and validating a scenario file.
    :param path: Scenario path.
    :return: Scenario configuration.
    """
    logger = logging.getLogger("HybridSizer.ScenarioController")
    logger.info(f"loading scenario '{path}' ...")
    return ScenarioConfig.from_file(path)


def shipped_scenarios() -> List[str]:
    return sorted(os.path.join(cfg.PATHS.SCENARIO_PATH, name) for name in os.listdir(cfg.PATHS.SCENARIO_PATH)
                  if name.endswith(".json"))
