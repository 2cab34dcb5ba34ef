#!/usr/bin/env python3
"""
Filesystem utilities for qprefix.

Reading and writing the text files the command-line front end consumes:
codebooks, binding files and JSON reports.
"""

import os
import logging

import chardet

logger = logging.getLogger(__name__)


def ensure_directory(directory_path):
    """
    Ensure a directory exists, creating it if necessary.

    Args:
        directory_path (str): Path to the directory

    Returns:
        str: Path to the directory
    """
    os.makedirs(directory_path, exist_ok=True)
    return directory_path


def detect_encoding(raw_data, default="utf-8"):
    """
    Guess the text encoding of raw file contents.

    Args:
        raw_data (bytes): File contents
        default (str): Encoding used when detection is inconclusive

    Returns:
        str: Encoding name
    """
    if not raw_data:
        return default
    result = chardet.detect(raw_data)
    encoding = result.get("encoding") or default
    confidence = result.get("confidence") or 0.0
    logger.debug(f"Detected {encoding} encoding with {confidence:.2f} confidence")
    # ASCII is a subset of UTF-8; prefer the latter so 'λ' later in a file still decodes
    if encoding.lower() == "ascii" or confidence < 0.5:
        return default
    return encoding


def get_file_contents(file_path):
    """
    Read a text file, detecting its encoding.

    Args:
        file_path (str): Path to the file

    Returns:
        str: The file contents

    Raises:
        OSError: If the file cannot be read
    """
    with open(file_path, "rb") as f:
        raw_data = f.read()
    encoding = detect_encoding(raw_data)
    text = raw_data.decode(encoding, errors="replace")
    # Strip a UTF-8 byte order mark
    if text.startswith("\ufeff"):
        text = text[1:]
    logger.debug(f"Read {len(text)} characters from {file_path}")
    return text


def write_file_contents(file_path, content, encoding="utf-8"):
    """
    Write content to a file, creating parent directories as needed.

    Args:
        file_path (str): Path to the file
        content (str): Content to write
        encoding (str): File encoding
    """
    directory = os.path.dirname(file_path)
    if directory:
        ensure_directory(directory)
    with open(file_path, "w", encoding=encoding) as f:
        f.write(content)
    logger.debug(f"Wrote {len(content)} characters to {file_path}")
