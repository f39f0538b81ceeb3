# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import json
from typing import Any
import numpy as np


class NumpyEncoder(json.JSONEncoder):
    """
    JSON encoder, converting numpy scalars and arrays into plain Python values.
    """

    def default(self, obj: Any) -> Any:
        """
        Method for encoding objects the default encoder does not support.
        :param obj: Object to encode.
        :return: Encodable representation.
        """
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        return super().default(obj)


def dumps(data: Any) -> str:
    """
    Function for deterministically encoding data as JSON text.
    :param data: Data to encode.
    :return: JSON text with sorted keys.
    """
    return json.dumps(data, indent=4, ensure_ascii=False, sort_keys=True, cls=NumpyEncoder)


def save(data: Any, path: str) -> None:
    """
    Function for saving data to path.
    :param data: Data as dictionary or list.
    :param path: Save path.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out_file:
        out_file.write(dumps(data) + "\n")


def load(path: str) -> Any:
    """
    Function for loading json data from path.
    :param path: Save path.
    :return: Loaded data.
    """
    with open(path, "r", encoding="utf-8") as in_file:
        return json.load(in_file)

