#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
from logging.handlers import RotatingFileHandler
import sys
from pathlib import Path
from config.settings import get_setting

def _parse_size(size_text):
    """Convert '10MB' / '512KB' / '1048576' to bytes."""
    size_text = size_text.strip().upper()
    if size_text.endswith('MB'):
        return int(size_text[:-2]) * 1024 * 1024
    if size_text.endswith('KB'):
        return int(size_text[:-2]) * 1024
    return int(size_text)

def setup_logger(level_name=None, log_to_file=True):
    """
    Setup application logger with file and console handlers.

    The console handler writes to stderr; stdout carries the JSON results
    of the command line front end.

    Args:
        level_name (str, optional): Overrides LOG_LEVEL
        log_to_file (bool): Attach the rotating file handler

    Returns:
        logging.Logger: Configured logger instance
    """
    log_level_name = level_name or get_setting('LOG_LEVEL', 'WARNING')
    log_file = get_setting('LOG_FILE', 'csf.log')
    log_max_size = get_setting('ERROR_LOG_MAX_SIZE', '10MB')
    log_backup_count = int(get_setting('ERROR_LOG_BACKUP_COUNT', 5))

    log_level = getattr(logging, log_level_name.upper(), logging.WARNING)

    logger = logging.getLogger()
    logger.setLevel(log_level)

    # Clear existing handlers to avoid duplicates
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    if log_to_file:
        logs_dir = Path(get_setting('LOG_DIR', 'logs'))
        try:
            logs_dir.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                logs_dir / log_file,
                maxBytes=_parse_size(log_max_size),
                backupCount=log_backup_count,
                encoding='utf-8'
            )
            file_handler.setLevel(log_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError as err:
            sys.stderr.write("Log file disabled: %s\n" % err)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    logger.info("Logger initialized with level %s", log_level_name)
    return logger
