#!/usr/bin/env python3
"""
Command handlers for the qprefix command-line front end.

Each handler takes the parsed argparse namespace, prints its report to
stdout (text or JSON) and returns an exit code:

    0  success, or the checked property holds
    1  the checked property does not hold
    2  malformed input (expression, index set, codebook)
    3  violated precondition (not orthonormal, not normalized, ...)
    4  resource guard (oracle cell limit)

Library code raises; `run_command` is the only place exceptions become
exit codes and stderr diagnostics.
"""

import json
import logging
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from functools import partial

from qprefix.analysis import CONDITIONS, check_orthonormal, check_prefix_free, kraft_report
from qprefix.codebook import codebook_to_dict, parse_codebook, read_codebook
from qprefix.config import ORACLE_AGREEMENT, resolve_tolerance
from qprefix.core.states import QOperator, QVector, density_from_vector
from qprefix.dsl import KEYWORDS, evaluate, evaluate_bindings, parse, parse_bindings, parse_index_set
from qprefix.errors import CodebookFormatError, EvaluationError, QPrefixError
from qprefix.sampling import make_rng, random_density, random_hermitian, random_index_set, spawn_seeds
from qprefix.tape import (
    IndexSet,
    check_oracle_guard,
    concat,
    duality_trial,
    normalization_report,
    prefix,
    restrict,
    restriction_trial,
)
from qprefix.tape.operations import restriction_cells
from qprefix.utils.filesystem import get_file_contents
from qprefix.utils.rendering import (
    format_real,
    format_scalar,
    render_kraft_chain,
    render_operator,
    render_table,
    render_value,
    render_vector,
    value_to_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1

DUALITY_MAX_LENGTH = 3

_VARIABLE_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _emit_json(data):
    print(json.dumps(data, indent=2, ensure_ascii=False))


def load_bindings(file_path):
    """
    Load variable bindings for expressions.

    A file whose first non-blank character is '{' is read as a codebook and
    its labels become variable names; anything else is a file of `let`
    statements.

    Args:
        file_path (str): Bindings file, or None

    Returns:
        dict: Name -> value
    """
    if file_path is None:
        return {}
    try:
        text = get_file_contents(file_path)
    except OSError as e:
        raise CodebookFormatError(f"{file_path}: {e.strerror or e}") from e

    if not text.lstrip().startswith("{"):
        bindings = evaluate_bindings(parse_bindings(text))
        logger.info(f"Loaded {len(bindings)} bindings from {file_path}")
        return bindings

    codebook = parse_codebook(text, source=str(file_path))
    bindings = {}
    for label, vector in codebook.bindings().items():
        if not _VARIABLE_NAME.fullmatch(label) or label in KEYWORDS:
            logger.warning(f"Skipping codebook label {label!r}: not usable as a variable name")
            continue
        bindings[label] = vector
    logger.info(f"Loaded {len(bindings)} codebook vectors from {file_path} as bindings")
    return bindings


def _evaluate_text(text, bindings, tol):
    return evaluate(parse(text), bindings, tol)


def _as_density(value, text):
    if isinstance(value, QOperator):
        return value
    if isinstance(value, QVector):
        return density_from_vector(value)
    raise EvaluationError(f"'{text}' evaluates to a number, expected a qubit string or density operator")


def cmd_eval(args):
    """Evaluate an expression and print its value with a norm annotation."""
    result = _evaluate_text(args.expr, load_bindings(args.bindings), args.tolerance)
    rendered = render_value(result.value)
    if args.json:
        _emit_json({
            "expression": args.expr,
            "value": value_to_json(result.value),
            "rendered": rendered,
            "norm": result.norm,
            "normalized": result.normalized,
        })
        return EXIT_OK

    print(rendered)
    if result.norm is not None and not result.normalized:
        name = "norm" if isinstance(result.value, QVector) else "trace"
        print(f"{name} = {format_real(result.norm)} (unnormalized)")
    return EXIT_OK


def _condition_summary(conditions):
    if len(conditions) == 1:
        return f"condition {conditions[0]}"
    return f"conditions {conditions[0]}–{conditions[-1]}"


def cmd_check(args):
    """Verify a codebook against the prefix-free conditions."""
    codebook = read_codebook(args.codebook)
    code_set = codebook.code_set
    tol = resolve_tolerance(args.tolerance)
    conditions = CONDITIONS if args.condition == "all" else (int(args.condition),)

    failure = check_orthonormal(code_set, tol)
    verdicts = [check_prefix_free(code_set, c, args.max_suffix_len, tol) for c in conditions]
    prefix_free = all(v.is_prefix_free for v in verdicts)
    logger.info(f"Checked {args.codebook}: prefix-free={prefix_free}")

    if args.json:
        _emit_json({
            "codebook": codebook_to_dict(code_set, codebook.metadata),
            "orthonormal": failure is None,
            "orthonormality_failure": None if failure is None else {
                "left_label": failure[0],
                "right_label": failure[1],
                "overlap": {"re": failure[2].real, "im": failure[2].imag},
            },
            "verdicts": [v.to_dict(code_set) for v in verdicts],
            "prefix_free": prefix_free,
        })
        return EXIT_OK if prefix_free else EXIT_FALSE

    if failure is None:
        noun = "vector" if len(code_set) == 1 else "vectors"
        print(f"orthonormal: yes ({len(code_set)} {noun})")
    else:
        print(f"orthonormal: no (<{failure[0]}|{failure[1]}> = {format_scalar(failure[2])})")

    rows = [
        [v.condition_used,
         "prefix-free" if v.is_prefix_free else "not prefix-free",
         "-" if v.witness is None else v.witness.describe()]
        for v in verdicts
    ]
    print(render_table(rows, ["condition", "verdict", "witness"]))

    if prefix_free:
        print(f"prefix-free under {_condition_summary(conditions)}")
        return EXIT_OK
    witness = next(v.witness for v in verdicts if not v.is_prefix_free)
    left, right = code_set.labels[witness.left_index], code_set.labels[witness.right_index]
    print(f"not prefix-free: witness ({left}, {right}) {witness.describe()}")
    return EXIT_FALSE


def cmd_kraft(args):
    """Print the quantum Kraft chain for an orthonormal codebook."""
    codebook = read_codebook(args.codebook)
    tol = resolve_tolerance(args.tolerance)
    report = kraft_report(codebook.code_set, tol)
    status = EXIT_OK if report.consistent else EXIT_FALSE

    if args.json:
        data = report.to_dict()
        data["chain"] = render_kraft_chain(report, tol)
        data["codebook"] = codebook_to_dict(codebook.code_set, codebook.metadata)
        _emit_json(data)
        return status

    print(render_kraft_chain(report, tol))
    rows = [
        [c.label, c.base_length, format_real(c.average_length), format_real(c.base_term),
         format_real(c.average_term), format_real(c.weight_term), "yes" if c.is_length_eigenstate else "no"]
        for c in report.contributions
    ]
    print(render_table(rows, ["label", "ℓ", "ℓ̄", "2^-ℓ", "2^-ℓ̄", "Tr(2^-Λ P)", "eigenstate"]))
    print(f"chain: {'holds' if report.chain_holds else 'violated'}")
    print(f"bounded by 1: {'yes' if report.bounded_by_one else 'no'}")
    if report.equality_case:
        print("equality case: every vector is a length eigenstate")
    else:
        print("strict: some vector is not a length eigenstate")
    print(f"prefix-free: {'yes' if report.prefix_free else 'no'}")
    return status


def cmd_restrict(args):
    """Prefix or restriction of an expression, optionally cross-checked against the dense oracle."""
    tol = resolve_tolerance(args.tolerance)
    value = _evaluate_text(args.expr, load_bindings(args.bindings), tol).value
    rho = _as_density(value, args.expr)
    if args.prefix is not None:
        index_set = IndexSet.interval(1, min(args.prefix, rho.max_length))
        result = prefix(rho, args.prefix)
    else:
        index_set = parse_index_set(args.indices)
        result = restrict(rho, index_set)

    deviation = None
    cells = None
    if args.oracle:
        cells = args.cells or restriction_cells(rho, index_set)
        deviation = restriction_trial(rho, index_set, cells)
        logger.info(f"Oracle deviation {deviation} over {cells} cells")
    status = EXIT_FALSE if deviation is not None and deviation > ORACLE_AGREEMENT else EXIT_OK

    if args.json:
        _emit_json({
            "expression": args.expr,
            "index_set": str(index_set),
            "value": value_to_json(result),
            "rendered": render_operator(result),
            "trace": result.trace.real,
            "oracle_cells": cells,
            "oracle_deviation": deviation,
        })
        return status

    print(render_operator(result))
    if deviation is not None:
        verdict = "agrees" if status == EXIT_OK else "DISAGREES"
        print(f"oracle {verdict}: max deviation {format_real(deviation)} over {cells} cells")
    return status


def cmd_concat(args):
    """Concatenate two qubit strings and report the norm bookkeeping."""
    bindings = load_bindings(args.bindings)
    left = _evaluate_text(args.left, bindings, args.tolerance).value
    right = _evaluate_text(args.right, bindings, args.tolerance).value
    if not (isinstance(left, QVector) and isinstance(right, QVector)):
        raise EvaluationError("concat needs two qubit strings (vectors)")
    result = concat(left, right)
    report = normalization_report([left, right], result)

    if args.json:
        _emit_json({
            "left": args.left,
            "right": args.right,
            "value": value_to_json(result),
            "rendered": render_vector(result),
            **report.to_dict(),
        })
        return EXIT_OK

    print(render_vector(result))
    inputs = ", ".join(format_real(n) for n in report.input_norms)
    print(f"norm = {format_real(report.output_norm)} (inputs {inputs}; lost weight {format_real(report.lost_weight)})")
    return EXIT_OK


def _random_trial(seed, cells):
    """One restriction trial and one duality trial from a per-trial seed."""
    rng = make_rng(seed)
    rho = random_density(rng, max_length=cells)
    index_set = random_index_set(rng, max_cell=cells)
    restriction = restriction_trial(rho, index_set, cells)

    small = random_density(rng, max_length=min(DUALITY_MAX_LENGTH, cells))
    kept = len(index_set.cells(cells))
    observable = random_hermitian(rng, max_length=min(kept, DUALITY_MAX_LENGTH))
    duality = duality_trial(small, observable, index_set)
    return restriction, duality


def _fixed_states(args):
    if args.codebook:
        codebook = read_codebook(args.codebook)
        return [(label, density_from_vector(v)) for label, v in zip(codebook.labels, codebook.code_set)]
    value = _evaluate_text(args.expr, load_bindings(args.bindings), args.tolerance).value
    return [(args.expr, _as_density(value, args.expr))]


def _fixed_trials(args):
    states = _fixed_states(args)
    if args.indices:
        index_sets = [parse_index_set(args.indices)]
    else:
        index_sets = [IndexSet.interval(1, n) for n in range(args.cells + 1)]
    results = []
    for label, rho in states:
        for index_set in index_sets:
            cells = max(args.cells, restriction_cells(rho, index_set))
            check_oracle_guard(cells)
            deviation = restriction_trial(rho, index_set, cells)
            logger.debug(f"{label} on {index_set}: deviation {deviation}")
            results.append((deviation, None))
    return results


def cmd_oracle(args):
    """Compare the sparse restriction with the dense tape oracle."""
    check_oracle_guard(args.cells)
    seed = 0 if args.seed is None else args.seed

    if args.expr or args.codebook:
        results = _fixed_trials(args)
    else:
        seeds = spawn_seeds(seed, args.trials)
        run_trial = partial(_random_trial, cells=args.cells)
        if args.workers > 1:
            with ThreadPoolExecutor(max_workers=args.workers) as pool:
                results = list(pool.map(run_trial, seeds))
        else:
            results = [run_trial(s) for s in seeds]

    restriction_max = max((r for r, _ in results), default=0.0)
    duality_max = max((d for _, d in results if d is not None), default=None)
    worst = max(restriction_max, duality_max or 0.0)
    passed = worst < ORACLE_AGREEMENT
    logger.info(f"Oracle run: {len(results)} trials, worst deviation {worst}")

    if args.json:
        _emit_json({
            "cells": args.cells,
            "trials": len(results),
            "seed": seed,
            "max_restriction_deviation": restriction_max,
            "max_duality_deviation": duality_max,
            "threshold": ORACLE_AGREEMENT,
            "passed": passed,
        })
        return EXIT_OK if passed else EXIT_FALSE

    print(f"oracle: {len(results)} trials over {args.cells} cells (seed {seed})")
    print(f"max restriction deviation: {format_real(restriction_max)}")
    if duality_max is not None:
        print(f"max duality deviation: {format_real(duality_max)}")
    print("PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_FALSE


COMMANDS = {
    "eval": cmd_eval,
    "check": cmd_check,
    "kraft": cmd_kraft,
    "restrict": cmd_restrict,
    "concat": cmd_concat,
    "oracle": cmd_oracle,
}


def run_command(args):
    """
    Dispatch to the handler for `args.command`.

    Returns:
        int: Exit code; library errors are printed to stderr and mapped to
        their `exit_code`
    """
    handler = COMMANDS[args.command]
    logger.info(f"Running {args.command}")
    try:
        return handler(args)
    except QPrefixError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"qprefix: error: {e}", file=sys.stderr)
        return e.exit_code
