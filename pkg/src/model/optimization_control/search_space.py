# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from dataclasses import dataclass
from itertools import product
from typing import List, Tuple, Sequence
import numpy as np
from src.model.exceptions import SearchSpaceException
from src.model.dispatch_control.system_config import SystemConfig, SIZING_FIELDS
from src.utility.gold.filter_mask import FilterMask


COUNT_DIMENSIONS = ("n_pv", "n_wt", "n_batt")


@dataclass(frozen=True)
class SearchSpace(object):
    """
    Candidate values per sizing dimension. Candidates are enumerated with n_pv varying slowest and
    converter_kw fastest.
    """
    n_pv: Tuple[int, ...] = (0,)
    n_wt: Tuple[int, ...] = (0,)
    n_batt: Tuple[int, ...] = (0,)
    genset_kw: Tuple[float, ...] = (0.0,)
    converter_kw: Tuple[float, ...] = (0.0,)

    def __post_init__(self) -> None:
        for dimension in SIZING_FIELDS:
            values = tuple(getattr(self, dimension))
            if not values:
                raise SearchSpaceException(dimension, "search space dimension is empty")
            if any(value < 0 for value in values):
                raise SearchSpaceException(dimension, "search space values must be nonnegative")
            if any(later <= earlier for earlier, later in zip(values, values[1:])):
                raise SearchSpaceException(dimension, "search space values must be strictly increasing")
            if dimension in COUNT_DIMENSIONS:
                if any(int(value) != value for value in values):
                    raise SearchSpaceException(dimension, "unit counts must be integers")
                values = tuple(int(value) for value in values)
            else:
                values = tuple(float(value) for value in values)
            object.__setattr__(self, dimension, values)

    @property
    def dimensions(self) -> List[Tuple]:
        return [getattr(self, dimension) for dimension in SIZING_FIELDS]

    @property
    def size(self) -> int:
        return int(np.prod([len(values) for values in self.dimensions]))

    def config_at(self, base: SystemConfig, index: Sequence[int]) -> SystemConfig:
        """
        Method for building the configuration at a grid index.
        :param base: Configuration carrying specs and strategy.
        :param index: Index per dimension.
        :return: Resized configuration.
        """
        return base.resized(**{dimension: values[position] for dimension, values, position
                               in zip(SIZING_FIELDS, self.dimensions, index)})


def enumerate_candidates(space: SearchSpace, base: SystemConfig = None) -> List[SystemConfig]:
    """
    Function for enumerating the Cartesian product of a search space in lexicographic order.
    :param space: Search space.
    :param base: Configuration carrying specs and strategy. Defaults to None in which case defaults are used.
    :return: Candidate configurations, one per grid point.
    """
    base = SystemConfig() if base is None else base
    return [base.resized(**dict(zip(SIZING_FIELDS, sizing))) for sizing in product(*space.dimensions)]


@dataclass(frozen=True)
class Constraints(object):
    """
    Feasibility constraints on annual dispatch results.
    """
    max_unmet_fraction: float = 0.0
    min_renewable_fraction: float = 0.0

    def __post_init__(self) -> None:
        for name in ("max_unmet_fraction", "min_renewable_fraction"):
            if not 0 <= getattr(self, name) <= 1:
                raise SearchSpaceException(name, "constraint must lie in [0, 1]")

    def filter_mask(self) -> FilterMask:
        """
        Method for expressing the constraints as a filter mask over dispatch aggregates.
        :return: Filter mask.
        """
        return FilterMask([
            ["unmet_fraction", "<=", self.max_unmet_fraction],
            ["renewable_fraction", ">=", self.min_renewable_fraction]
        ])
