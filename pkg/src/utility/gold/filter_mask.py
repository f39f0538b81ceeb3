# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import copy
from typing import Any, List, Union
from ..bronze import dictionary_utility
from ..bronze.comparison_utility import COMPARISON_METHOD_DICTIONARY as CMD, MARGIN_METHOD_DICTIONARY as MMD


class FilterMaskOperatorException(Exception):
    """
    FilterMaskOperatorException class.
    """

    def __init__(self, expressions: list, comparison_dict: dict,
                 message: str = "exception occurred while configuring FilterMasks") -> None:
        """
        Initiation method for the exception.
        :param expressions: FilterMasks expressions.
        :param comparison_dict: Comparison dictionary.
        :param message: Message to include in exception.
        """
        self.expressions = expressions
        self.comparison_dict = comparison_dict
        self.message = message
        super().__init__(self.message)

    def __str__(self) -> str:
        """
        Method for encoding exception as string.
        :return: Exception string.
        """
        return f"{self.message} : {list(self.comparison_dict)} with {self.expressions}"


class FilterMask(object):
    """
    Class, representing FilterMasks objects.
    FilterMasks objects contain a list of constraint expressions.
    An expression is a list of the form ["key", "operator", "value"], where "key" may be a dotted path into
    nested dictionaries.
    When checking data against a FilterMask, all expressions need be correct in order for the data to be validated.
    Violated expressions can be reported together with their signed margin.
    """

    def __init__(self, expressions: List[list], operator_dictionary: dict = None) -> None:
        """
        Initiation method for FilterMasks objects.
        :param expressions: List of expressions.
        :param operator_dictionary: Operator dictionary to initiate FilterMasks with.
            Defaults to None in which case the default utility comparison dictionary is used.
        """
        self.operator_dictionary = operator_dictionary if operator_dictionary is not None else CMD
        self.expressions = []
        self.add_filter_expressions(expressions)

    def add_filter_expressions(self, expressions: List[list]) -> None:
        """
        Method for adding FilterMask expressions.
        :param expressions: Filter expressions.
        """
        if not all(exp[1] in self.operator_dictionary for exp in expressions):
            raise FilterMaskOperatorException(
                expressions, self.operator_dictionary)
        self.expressions.extend(copy.deepcopy(expressions))

    def _extract(self, data: Union[dict, Any], key: str) -> Any:
        """
        Internal method for extracting a target value from dictionaries or objects.
        :param data: Data or object.
        :param key: Dotted key path.
        :return: Target value.
        """
        if isinstance(data, dict):
            return dictionary_utility.extract_nested_value(data, key)
        for part in key.split("."):
            data = getattr(data, part)
        return data

    def check(self, data: Union[dict, Any]) -> bool:
        """
        Method for checking FilterMasks on data.
        :param data: Data or object to validate.
        :return: True, if data matches filters, else False.
        """
        return all(self.operator_dictionary[exp[1]](self._extract(data, exp[0]), exp[2])
                   for exp in self.expressions)

    def get_violations(self, data: Union[dict, Any]) -> List[dict]:
        """
        Method for collecting violated expressions.
        :param data: Data or object to validate.
        :return: List of violation records with key, operator, limit, actual value and margin.
        """
        violations = []
        for key, operator, limit in self.expressions:
            actual = self._extract(data, key)
            if not self.operator_dictionary[operator](actual, limit):
                violations.append({
                    "constraint": key,
                    "operator": operator,
                    "limit": limit,
                    "actual": actual,
                    "margin": MMD[operator](actual, limit) if operator in MMD else None
                })
        return violations
