# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import logging
from typing import Dict
import requests
from src.configuration import configuration as cfg
from src.model.exceptions import (NetworkDisabledException, NasaPowerConnectionException, NasaPowerStatusException,
                                  NasaPowerPayloadException, ResourceException)
from src.model.resource_control.time_series import MonthlyProfile, Quantity
from src.utility.bronze import requests_utility, time_utility


# POWER parameter -> (quantity, converts daily totals)
NASA_POWER_PARAMETERS = {
    "ALLSKY_SFC_SW_DWN": (Quantity.GHI, True),
    "WS10M": (Quantity.WIND, False),
    "T2M": (Quantity.TEMPERATURE, False)
}


def get_base_url() -> str:
    """
    Function for getting the NASA POWER base URL, overridable through NASA_POWER_BASE_URL.
    :return: Base URL without trailing slash.
    """
    return str(cfg.get_environment_value("NASA_POWER_BASE_URL", cfg.URLS.NASA_POWER_BASE_URL)).rstrip("/")


def fetch_nasa_monthly(latitude: float, longitude: float, allow_network: bool = False,
                       session: requests.Session = None) -> Dict[Quantity, MonthlyProfile]:
    """
    Function for fetching monthly climatology for a site from the NASA POWER API.
    :param latitude: Latitude in degrees.
    :param longitude: Longitude in degrees.
    :param allow_network: Flag, declaring whether network access is enabled. Defaults to False.
    :param session: Requests session. Defaults to None in which case a new session is created.
    :return: Monthly profiles for irradiance, wind speed (at 10 m) and air temperature.
    """
    if not allow_network:
        raise NetworkDisabledException(context="NASA POWER")
    if not (-90 <= latitude <= 90 and -180 <= longitude <= 180):
        raise ResourceException("invalid site coordinates", context=(
            latitude, longitude))
    logger = logging.getLogger("HybridSizer.NasaPower")
    url = get_base_url() + cfg.URLS.NASA_POWER_CLIMATOLOGY_ENDPOINT
    params = {
        "parameters": ",".join(NASA_POWER_PARAMETERS),
        "community": "RE",
        "latitude": latitude,
        "longitude": longitude,
        "format": "JSON"
    }
    logger.info(f"requesting NASA POWER climatology for ({latitude}, {longitude}) ...")
    session = session if session is not None else requests_utility.get_session()
    try:
        resp = requests_utility.safely_request_page(session, url, params=params)
    except requests.exceptions.RequestException as ex:
        raise NasaPowerConnectionException(
            "NASA POWER service unreachable", context=str(ex)) from ex
    if resp.status_code != 200:
        raise NasaPowerStatusException(resp.status_code, context=url)
    try:
        payload = resp.json()
    except ValueError as ex:
        raise NasaPowerPayloadException("<json body>") from ex
    return parse_nasa_payload(payload)


def parse_nasa_payload(payload: dict) -> Dict[Quantity, MonthlyProfile]:
    """
    Function for extracting monthly profiles from a NASA POWER climatology response.
    :param payload: Decoded JSON response.
    :return: Monthly profiles per quantity.
    """
    try:
        parameters = payload["properties"]["parameter"]
    except (KeyError, TypeError):
        raise NasaPowerPayloadException("properties.parameter")
    profiles = {}
    for name, (quantity, daily_totals) in NASA_POWER_PARAMETERS.items():
        if not isinstance(parameters, dict) or name not in parameters:
            raise NasaPowerPayloadException(f"properties.parameter.{name}")
        values = []
        for month in time_utility.MONTH_NAMES:
            if month not in parameters[name]:
                raise NasaPowerPayloadException(
                    f"properties.parameter.{name}.{month}")
            values.append(float(parameters[name][month]))
        profiles[quantity] = MonthlyProfile.from_daily_totals(quantity, values) if daily_totals else MonthlyProfile(
            quantity, values)
    return profiles
