#!/usr/bin/env python3
"""
Logging Configuration Module

This module provides a centralized logging configuration for all modules in the package.
It configures:
- Console output (stderr) with colored formatting based on log level
- Optional file output with detailed formatting including timestamps
- Separate log files for each run with date-based naming
- Log rotation and automatic cleanup of old log files

Usage:
    from qprefix.utils.logging import configure_logging

    configure_logging()
    logger = logging.getLogger(__name__)
    logger.debug("Detailed debug information")
"""

import os
import sys
import glob
import time
import logging
import datetime
from logging.handlers import RotatingFileHandler

from qprefix.config import LOGS_DIR, ensure_directories

LOG_FILE_PREFIX = "qprefix_"


# ANSI color codes for colored console output
class Colors:
    RESET = "\033[0m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"
    BOLD = "\033[1m"


# Custom formatter for console output with colors
class ColoredFormatter(logging.Formatter):
    FORMATS = {
        logging.DEBUG: Colors.BLUE + "%(levelname)s" + Colors.RESET + " - %(name)s - %(message)s",
        logging.INFO: Colors.GREEN + "%(levelname)s" + Colors.RESET + " - %(message)s",
        logging.WARNING: Colors.YELLOW + "%(levelname)s" + Colors.RESET + " - %(message)s",
        logging.ERROR: Colors.RED + "%(levelname)s" + Colors.RESET + " - %(message)s",
        logging.CRITICAL: Colors.BOLD + Colors.RED + "%(levelname)s" + Colors.RESET + " - %(message)s",
    }

    def format(self, record):
        log_fmt = self.FORMATS.get(record.levelno)
        formatter = logging.Formatter(log_fmt)
        return formatter.format(record)


def cleanup_old_logs(log_dir, max_age_days=7, max_files=100):
    """
    Clean up old log files to prevent disk space issues.

    Args:
        log_dir: Directory containing log files
        max_age_days: Maximum age of log files in days (default: 7)
        max_files: Maximum number of log files to keep (default: 100)
    """
    log_files = glob.glob(os.path.join(log_dir, f"{LOG_FILE_PREFIX}*.log"))
    if not log_files:
        return

    # Oldest first
    log_files.sort(key=os.path.getmtime)

    max_age_seconds = max_age_days * 24 * 60 * 60
    current_time = time.time()
    for log_file in log_files[:]:
        if current_time - os.path.getmtime(log_file) > max_age_seconds:
            try:
                os.remove(log_file)
                log_files.remove(log_file)
            except OSError as e:
                # Logger might not be configured yet
                print(f"Could not remove old log file {log_file}: {e}", file=sys.stderr)

    if len(log_files) > max_files:
        for log_file in log_files[:(len(log_files) - max_files)]:
            try:
                os.remove(log_file)
            except OSError as e:
                print(f"Could not remove excess log file {log_file}: {e}", file=sys.stderr)


def configure_logging(console_level=logging.WARNING, file_level=logging.DEBUG,
                      log_to_file=True, max_log_size_mb=10, backup_count=5, max_age_days=7,
                      log_dir=None):
    """
    Configure logging for the application.

    Args:
        console_level: Logging level for console output (default: WARNING)
        file_level: Logging level for file output (default: DEBUG)
        log_to_file: Whether to also write a per-run log file (default: True)
        max_log_size_mb: Maximum size of log files in MB before rotation (default: 10)
        backup_count: Number of backup files to keep when rotating (default: 5)
        max_age_days: Maximum age of log files in days (default: 7)
        log_dir: Directory for run logs (default: LOGS_DIR)

    Returns:
        str or None: Path to the log file, or None when file logging is off
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    # stdout is reserved for command output
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(ColoredFormatter())
    root_logger.addHandler(console_handler)

    log_file = None
    if log_to_file:
        if log_dir is None:
            ensure_directories()
            log_dir = LOGS_DIR
        else:
            os.makedirs(log_dir, exist_ok=True)
        cleanup_old_logs(log_dir, max_age_days)

        timestamp = datetime.datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = os.path.join(log_dir, f"{LOG_FILE_PREFIX}{timestamp}.log")

        file_format = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_log_size_mb * 1024 * 1024,
            backupCount=backup_count
        )
        file_handler.setLevel(file_level)
        file_handler.setFormatter(file_format)
        root_logger.addHandler(file_handler)

    logger = logging.getLogger(__name__)
    logger.debug(f"Logging configured - Log file: {log_file}")
    return log_file

