#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys
import logging
import hashlib
from pathlib import Path
from typing import Optional

logger = logging.getLogger(__name__)

def ensure_dir(directory) -> bool:
    """
    Ensure a directory exists, creating it if necessary

    Args:
        directory (str | Path): Directory path

    Returns:
        bool: True if the directory exists or was created, False otherwise
    """
    try:
        os.makedirs(directory, exist_ok=True)
        return True
    except OSError as e:
        logger.error("Failed to create directory %s: %s", directory, e)
        return False

def is_path_writable(path) -> bool:
    """
    Check if a path is writable, walking up to the first existing parent

    Args:
        path (str | Path): Path to check

    Returns:
        bool: True if the path is writable, False otherwise
    """
    path = str(path)
    if os.path.exists(path):
        return os.access(path, os.W_OK)
    parent = os.path.dirname(os.path.abspath(path))
    if not parent or parent == path:
        return False
    return is_path_writable(parent)

def calculate_text_hash(text: str, hash_type: str = 'sha256') -> Optional[str]:
    """
    Calculate the hex digest of a text payload

    Args:
        text (str): Text to hash (encoded as UTF-8)
        hash_type (str): Hash algorithm to use (md5, sha1, sha256)

    Returns:
        str: Hex digest, or None for an unsupported algorithm
    """
    try:
        hash_func = hashlib.new(hash_type.lower())
    except ValueError:
        logger.error("Unsupported hash type: %s", hash_type)
        return None
    hash_func.update(text.encode('utf-8'))
    return hash_func.hexdigest()

def read_text_input(source) -> str:
    """
    Read a whole text input, where ``-`` means stdin

    Args:
        source (str | Path): File path or ``-``

    Returns:
        str: File content

    Raises:
        OSError: If the file cannot be read
    """
    if str(source) == '-':
        return sys.stdin.read()
    return Path(source).read_text(encoding='utf-8')

def write_text_output(target, text: str, stream=None) -> None:
    """
    Write text to a file, or to a stream when target is ``-`` or None

    Args:
        target (str | Path | None): Output path
        text (str): Payload
        stream (TextIO, optional): Stream for ``-``, stdout by default
    """
    if target is None or str(target) == '-':
        stream = stream or sys.stdout
        stream.write(text)
        if not text.endswith('\n'):
            stream.write('\n')
        return
    target = Path(target)
    if target.parent and not target.parent.exists():
        ensure_dir(target.parent)
    target.write_text(text if text.endswith('\n') else text + '\n', encoding='utf-8')
    logger.info("Wrote %s", target)
