# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import copy
from typing import Any, List, Union


def merge_data(base_data: dict, new_data: dict) -> dict:
    """
    Function for merging a nested override dictionary into a deep copy of a base dictionary.
    Nested dictionaries are merged recursively, all other values are replaced.
    :param base_data: Base dictionary, left untouched.
    :param new_data: Dictionary containing override data.
    :return: Merged dictionary.
    """
    merged = copy.deepcopy(base_data)
    for key, value in new_data.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = merge_data(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def find_unknown_paths(reference: dict, data: dict, open_keys: List[str] = None,
                       field_path: List[str] = None) -> List[str]:
    """
    Function for collecting field paths of data that do not exist in a reference structure.
    :param reference: Reference dictionary declaring all allowed fields.
    :param data: Dictionary to check.
    :param open_keys: Dotted paths of dictionaries whose keys are free-form and not checked.
        Defaults to None.
    :param field_path: Path to the current element. Defaults to the dictionary root.
    :return: Dotted paths of unknown fields.
    """
    open_keys = open_keys or []
    field_path = field_path or []
    unknown = []
    if ".".join(field_path) in open_keys:
        return unknown
    for key, value in data.items():
        current = field_path + [str(key)]
        if key not in reference:
            unknown.append(".".join(current))
        elif isinstance(reference[key], dict) and isinstance(value, dict):
            unknown.extend(find_unknown_paths(
                reference[key], value, open_keys, current))
    return unknown


def extract_nested_value(data: dict, keys: Union[list, str]) -> Any:
    """
    Function for extracting potentially nested values.
    :param data: Data to extract value from.
    :param keys: List of keys as path to target field, single key or dotted path.
    :return: Value of potentially nested field.
    """
    if isinstance(keys, str):
        keys = keys.split(".")
    for key in keys:
        data = data[key]
    return data

