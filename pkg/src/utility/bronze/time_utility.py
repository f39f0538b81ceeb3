# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from typing import List, Tuple
import numpy as np


HOURS_PER_DAY = 24
DAYS_PER_MONTH = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
DAYS_PER_YEAR = sum(DAYS_PER_MONTH)
HOURS_PER_YEAR = DAYS_PER_YEAR * HOURS_PER_DAY
MONTH_NAMES = ("JAN", "FEB", "MAR", "APR", "MAY", "JUN",
               "JUL", "AUG", "SEP", "OCT", "NOV", "DEC")
# Non-leap year, no timezone handling.


def get_month_slices() -> List[Tuple[int, int]]:
    """
    Function for getting hour index bounds of each month.
    :return: List of (first hour, end hour) tuples, end exclusive.
    """
    bounds = []
    start = 0
    for days in DAYS_PER_MONTH:
        bounds.append((start, start + days * HOURS_PER_DAY))
        start += days * HOURS_PER_DAY
    return bounds


def get_month_of_day() -> np.ndarray:
    """
    Function for getting the zero-based month index of every day of the year.
    :return: Integer array of length 365.
    """
    return np.repeat(np.arange(12), DAYS_PER_MONTH)


def get_hour_of_day() -> np.ndarray:
    """
    Function for getting the hour of day of every hour of the year.
    :return: Integer array of length 8760.
    """
    return np.tile(np.arange(HOURS_PER_DAY), DAYS_PER_YEAR)

