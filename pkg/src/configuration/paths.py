# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import os

PACKAGE_PATH = os.path.dirname(os.path.dirname(
    os.path.dirname(os.path.abspath(__file__))))
DATA_PATH = os.path.join(PACKAGE_PATH, "data")
SCENARIO_PATH = os.path.join(DATA_PATH, "scenarios")
PROFILE_PATH = os.path.join(DATA_PATH, "profiles")
SHAPE_PATH = os.path.join(DATA_PATH, "shapes")
CURVE_PATH = os.path.join(DATA_PATH, "curves")
EMISSION_FACTOR_PATH = os.path.join(DATA_PATH, "emissions")

DAILY_SHAPES_FILE = os.path.join(SHAPE_PATH, "daily_shapes.json")
KHOBAR_PROFILE_FILE = os.path.join(PROFILE_PATH, "khobar_monthly.json")
DEFAULT_POWER_CURVE_FILE = os.path.join(CURVE_PATH, "generic_3kw.csv")
DEFAULT_EMISSION_FACTORS_FILE = os.path.join(
    EMISSION_FACTOR_PATH, "default_factors.env")
