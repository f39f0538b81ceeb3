# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import os


def clean_path(path: str) -> str:
    """
    Function for cleaning paths by replacing double backslashes with single forward slashes.
    :param path: Path to be cleaned.
    :return: Cleaned path.
    """
    return path.replace("\\", "/")


def safely_create_path(path: str) -> None:
    """
    Function for safely creating folder path.
    :param path: Folder path to create.
    """
    if not os.path.exists(path):
        os.makedirs(path)


def resolve_relative_path(path: str, anchor_file: str) -> str:
    """
    Function for resolving a path relative to the folder of an anchor file.
    :param path: Absolute path or path relative to the anchor's folder.
    :param anchor_file: File to resolve relative paths against.
    :return: Absolute, normalized path.
    """
    if os.path.isabs(path):
        return os.path.normpath(path)
    return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(anchor_file)), path))


def write_text(text: str, path: str) -> None:
    """
    Function for writing text with unix line endings.
    :param text: Text to write.
    :param path: Target path.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as out_file:
        out_file.write(text)


def read_text(path: str) -> str:
    """
    Function for reading text.
    :param path: Source path.
    :return: Text content.
    """
    with open(path, "r", encoding="utf-8") as in_file:
        return in_file.read()
