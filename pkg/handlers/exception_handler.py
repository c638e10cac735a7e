#!/usr/bin/env python
# -*- coding: utf-8 -*-

import sys
import traceback
import logging
from config.settings import get_bool_setting
from handlers.exceptions import CsfError, UsageError

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE_ERROR = 2

class ExceptionHandler:
    """Global exception handler for the command line front end"""

    def __init__(self, stream=None):
        self.logger = logging.getLogger(__name__)
        self.stream = stream
        self.show_detailed_errors = get_bool_setting('SHOW_DETAILED_ERRORS', False)

    def install(self):
        """Install this exception handler as the global exception handler"""
        sys.excepthook = self.handle_exception
        self.logger.info("Global exception handler installed")

    def handle_exception(self, exc_type, exc_value, exc_traceback):
        """
        Handle uncaught exceptions

        Args:
            exc_type: Exception type
            exc_value: Exception value
            exc_traceback: Exception traceback
        """
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return

        self.logger.error(
            "Uncaught exception",
            exc_info=(exc_type, exc_value, exc_traceback)
        )
        tb_str = ''.join(traceback.format_exception(exc_type, exc_value, exc_traceback))
        self.show_error(str(exc_value), tb_str)

    def show_error(self, message, traceback_str=None):
        """
        Print an error message to stderr

        Args:
            message (str): Error message
            traceback_str (str, optional): Formatted traceback
        """
        stream = self.stream or sys.stderr
        stream.write("error: %s\n" % message)
        if self.show_detailed_errors and traceback_str:
            stream.write(traceback_str)
        stream.flush()

    def handle_error(self, error):
        """
        Report an error raised while running a command and pick the exit code

        Args:
            error (BaseException): The raised error

        Returns:
            int: 2 for usage errors, 1 for everything else
        """
        tb_str = ''.join(traceback.format_exception(type(error), error, error.__traceback__))
        if isinstance(error, UsageError):
            self.logger.warning("Usage error: %s", error)
            self.show_error(str(error), tb_str)
            return EXIT_USAGE_ERROR
        if isinstance(error, CsfError):
            self.logger.error("%s: %s", type(error).__name__, error)
            self.show_error(str(error), tb_str)
            return error.exit_code
        self.logger.error("Unexpected error", exc_info=error)
        self.show_error("%s: %s" % (type(error).__name__, error), tb_str)
        return EXIT_DATA_ERROR

def setup_exception_handler(stream=None):
    """
    Setup the global exception handler

    Args:
        stream (TextIO, optional): Where error messages go, stderr by default

    Returns:
        ExceptionHandler: The exception handler instance
    """
    handler = ExceptionHandler(stream)
    handler.install()
    return handler
