# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from . import urls as URLS
from . import paths as PATHS
from dotenv import dotenv_values
import os
import logging


"""
Environment file
"""
ENV = {**dotenv_values(os.path.join(PATHS.PACKAGE_PATH, ".env")),
       **{key: value for key, value in os.environ.items() if key in ("LOG_LEVEL",
                                                                   "HYBRID_SIZER_OUTPUT_DIR",
                                                                   "NASA_POWER_BASE_URL")}}


def get_environment_value(key: str, default: str = None) -> str:
    """
    Function for reading a configuration value, process environment taking precedence over the .env file.
    :param key: Environment key.
    :param default: Default value if key is not set.
    :return: Configured value.
    """
    return os.environ.get(key, ENV.get(key, default))


"""
Defaults
"""
DEFAULT_SEED = 20240526
HOURS_PER_YEAR = 8760


"""
Logger
"""
LOGGER = logging.getLogger("HybridSizer")
if not LOGGER.handlers:
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter(
        "[%(levelname)s] %(name)s: %(message)s"))
    LOGGER.addHandler(_handler)
LOGGER.setLevel(level=getattr(
    logging, str(get_environment_value("LOG_LEVEL", "INFO")).upper(), logging.INFO))
