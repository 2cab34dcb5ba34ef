#!/usr/bin/env python3
"""
Configuration module for the qprefix package.

This module provides central configuration settings and constants used across
the package: numeric tolerances, resource guards, file format versions and
default paths.
"""

import os
import logging
from pathlib import Path

logger = logging.getLogger(__name__)


# Determine the project root directory
PROJECT_ROOT = Path(__file__).parent.parent.absolute()

# Default directories
DATA_DIR = os.path.join(PROJECT_ROOT, "data")
CODEBOOKS_DIR = os.path.join(DATA_DIR, "codebooks")
LOGS_DIR = os.environ.get("QPREFIX_LOG_DIR", os.path.join(PROJECT_ROOT, "logs"))

# Numeric tolerances
DEFAULT_TOLERANCE = 1e-9    # orthogonality, normalization, support, inequalities
PRUNE_TOLERANCE = 1e-12     # amplitudes below this are not stored
RANK_TOLERANCE = 1e-8       # Gram-Schmidt residuals below this are dropped
TOLERANCE_ENV_VAR = "QPREFIX_TOLERANCE"

# Dense tape oracle: 3^N x 3^N complex matrix
ORACLE_MAX_CELLS = 8
ORACLE_AGREEMENT = 1e-9

# Largest cell index an IndexSet may name; a finite set or the excluded part
# of a cofinite set is stored explicitly.
MAX_CELL_INDEX = 1_000_000

# File formats
CODEBOOK_FORMAT_VERSION = 1

# Command-line defaults
DEFAULT_LOG_LEVEL = "WARNING"


def ensure_directories():
    """Create all necessary directories if they don't exist."""
    for directory in [LOGS_DIR]:
        os.makedirs(directory, exist_ok=True)


def get_default_tolerance():
    """
    Get the comparison tolerance, honouring the QPREFIX_TOLERANCE override.

    Returns:
        float: Tolerance from the environment if set and valid, else DEFAULT_TOLERANCE
    """
    raw = os.environ.get(TOLERANCE_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        logger.warning(f"Ignoring unparseable {TOLERANCE_ENV_VAR}={raw!r}")
        return DEFAULT_TOLERANCE
    if not value > 0:
        logger.warning(f"Ignoring non-positive {TOLERANCE_ENV_VAR}={raw!r}")
        return DEFAULT_TOLERANCE
    return value


def resolve_tolerance(tol=None):
    """Return `tol` when given, otherwise the configured default tolerance."""
    if tol is None:
        return get_default_tolerance()
    return float(tol)
