# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
COMPARISON_METHOD_DICTIONARY = {
    "==": lambda x, y: x == y,
    "!=": lambda x, y: x != y,
    "<": lambda x, y: x < y,
    "<=": lambda x, y: x <= y,
    ">": lambda x, y: x > y,
    ">=": lambda x, y: x >= y
}
# Signed distance to the constraint boundary, positive when satisfied.
MARGIN_METHOD_DICTIONARY = {
    "<": lambda x, y: y - x,
    "<=": lambda x, y: y - x,
    ">": lambda x, y: x - y,
    ">=": lambda x, y: x - y,
    "==": lambda x, y: -abs(x - y),
    "!=": lambda x, y: abs(x - y)
}
