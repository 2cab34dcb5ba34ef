#!/usr/bin/env python3
"""
Main entry point for the qprefix package.

This module allows the package to be run directly using:
`python -m qprefix <command> [options]`

Commands:
    eval      Evaluate an expression and print the result
    check     Verify a codebook against the prefix-free conditions
    kraft     Print the quantum Kraft chain of an orthonormal codebook
    restrict  Prefix or restriction of an expression
    concat    Concatenate two qubit strings
    oracle    Cross-check restrictions against the dense tape oracle
"""

import argparse
import logging
import sys

from qprefix import __version__
from qprefix.commands import run_command
from qprefix.config import DEFAULT_LOG_LEVEL, ORACLE_MAX_CELLS
from qprefix.utils.logging import configure_logging

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _positive_int(text):
    value = _non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive, got 0")
    return value


def _common_options():
    """Flags accepted by every command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tolerance",
        type=_positive_float,
        default=None,
        help="Comparison tolerance (default: $QPREFIX_TOLERANCE or 1e-9)"
    )
    common.add_argument("--json", action="store_true", help="Print a JSON report instead of text")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized commands")
    common.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default=DEFAULT_LOG_LEVEL,
        help=f"Set the console logging level (default: {DEFAULT_LOG_LEVEL})"
    )
    common.add_argument("--no-log-file", action="store_true", help="Do not write a log file")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="qprefix",
        description="qprefix - indeterminate-length qubit strings, prefix-free codes and the quantum Kraft inequality"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    eval_parser = subparsers.add_parser("eval", parents=[common], help="Evaluate an expression")
    eval_parser.add_argument("expr", help="Expression, e.g. \"dm(1/sqrt(2)*|1> + 1/sqrt(2)*|110>)^2\"")
    eval_parser.add_argument("--bindings", help="File of `let` statements, or a codebook whose labels become names")

    check_parser = subparsers.add_parser("check", parents=[common], help="Verify prefix-freeness of a codebook")
    check_parser.add_argument("codebook", help="Codebook JSON file")
    check_parser.add_argument(
        "--condition",
        choices=["1", "2", "3", "4", "all"],
        default="all",
        help="Which equivalent condition to check (default: all)"
    )
    check_parser.add_argument(
        "--max-suffix-len",
        type=_non_negative_int,
        default=None,
        help="Longest classical suffix to enumerate (default: largest base length)"
    )

    kraft_parser = subparsers.add_parser("kraft", parents=[common], help="Quantum Kraft report for a codebook")
    kraft_parser.add_argument("codebook", help="Orthonormal codebook JSON file")

    restrict_parser = subparsers.add_parser("restrict", parents=[common], help="Prefix or restriction of an expression")
    restrict_parser.add_argument("expr", help="Expression evaluating to a qubit string or density operator")
    target = restrict_parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--prefix", type=_non_negative_int, help="Keep the first N cells")
    target.add_argument("--indices", help="Index set, e.g. \"[2,4]\", \"{1,3}\" or \"[3,inf)\"")
    restrict_parser.add_argument("--oracle", action="store_true", help="Cross-check against the dense oracle")
    restrict_parser.add_argument(
        "--cells", type=_positive_int, default=None, help="Tape cells for the oracle (default: smallest sufficient)"
    )
    restrict_parser.add_argument("--bindings", help="File of `let` statements, or a codebook")

    concat_parser = subparsers.add_parser("concat", parents=[common], help="Concatenate two qubit strings")
    concat_parser.add_argument("left", help="Left expression")
    concat_parser.add_argument("right", help="Right expression")
    concat_parser.add_argument("--bindings", help="File of `let` statements, or a codebook")

    oracle_parser = subparsers.add_parser("oracle", parents=[common], help="Compare restrictions with the dense oracle")
    oracle_parser.add_argument(
        "--cells", type=_positive_int, default=5, help=f"Tape cells (default: 5, at most {ORACLE_MAX_CELLS})"
    )
    oracle_parser.add_argument("--trials", type=_positive_int, default=100, help="Random trials (default: 100)")
    oracle_parser.add_argument("--workers", type=_positive_int, default=1, help="Worker threads (default: 1)")
    source = oracle_parser.add_mutually_exclusive_group()
    source.add_argument("--expr", help="Check this expression instead of random states")
    source.add_argument("--codebook", help="Check every vector of this codebook instead of random states")
    oracle_parser.add_argument("--indices", help="Index set for --expr/--codebook (default: every prefix)")
    oracle_parser.add_argument("--bindings", help="File of `let` statements, or a codebook")

    return parser


def main(argv=None):
    """
    Main entry point function handling command line arguments.

    Returns:
        int: Exit code
    """
    args = build_parser().parse_args(argv)

    # Configure logging
    log_level = getattr(logging, args.log_level)
    configure_logging(console_level=log_level, log_to_file=not args.no_log_file)

    logger = logging.getLogger(__name__)
    logger.debug(f"Arguments: {vars(args)}")

    return run_command(args)


if __name__ == "__main__":
    sys.exit(main())
