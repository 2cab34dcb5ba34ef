#!/usr/bin/env python3
"""
Evaluation of syntax trees against the core, tape and analysis operations.

Values are QVectors, QOperators or Python numbers. Environments are
mappings from names to values; `let` statements extend a copy, never the
caller's mapping.
"""

import logging
import math
from dataclasses import dataclass
from types import MappingProxyType

from qprefix.config import resolve_tolerance
from qprefix.core.states import QOperator, QVector, density_from_vector, inner_product
from qprefix.errors import EvaluationError
from qprefix.dsl.nodes import (
    Add, Concat, Density, Inner, KetLiteral, Let, Norm, Prefix, Program, Restrict,
    ScalarLiteral, ScalarMul, Sub, Tensor, TensorAt, Variable, pretty_print,
)
from qprefix.tape.operations import concat, prefix, restrict, tensor, tensor_at

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Evaluation:
    """
    A value with its norm annotation.

    `norm` is the vector norm for vectors, the trace for operators and None
    for numbers; `normalized` says whether it equals 1 within tolerance.
    """

    value: object
    norm: float = None
    normalized: bool = None


def _kind(value):
    if isinstance(value, QVector):
        return "vector"
    if isinstance(value, QOperator):
        return "operator"
    return "scalar"


def _is_scalar(value):
    return _kind(value) == "scalar"


def _mismatch(node, message):
    where = f" at {node.span[0]}:{node.span[1]}" if node.span else ""
    return EvaluationError(f"{message}{where} in '{pretty_print(node)}'")


def _eval_ket(node, env):
    return QVector.basis(node.string)


def _eval_scalar(node, env):
    return float(node)


def _eval_variable(node, env):
    if node.name not in env:
        raise _mismatch(node, f"unbound variable '{node.name}'")
    return env[node.name]


def _same_kind(node, left, right, verb):
    if _kind(left) != _kind(right):
        raise _mismatch(node, f"cannot {verb} {_kind(left)} and {_kind(right)}")


def _eval_add(node, env):
    left, right = evaluate_value(node.left, env), evaluate_value(node.right, env)
    _same_kind(node, left, right, "add")
    return left + right


def _eval_sub(node, env):
    left, right = evaluate_value(node.left, env), evaluate_value(node.right, env)
    _same_kind(node, left, right, "subtract")
    return left - right


def _eval_scalar_mul(node, env):
    left, right = evaluate_value(node.left, env), evaluate_value(node.right, env)
    if _is_scalar(left):
        return complex(left) * right if not _is_scalar(right) else left * right
    if _is_scalar(right):
        return complex(right) * left
    raise _mismatch(node, "'*' needs a scalar operand; use '.' or '(x)' to combine qubit strings")


def _eval_concat(node, env):
    left, right = evaluate_value(node.left, env), evaluate_value(node.right, env)
    if not (isinstance(left, QVector) and isinstance(right, QVector)):
        raise _mismatch(node, f"concatenation needs two vectors, got {_kind(left)} and {_kind(right)}")
    return concat(left, right)


def _tensor_operands(node, env):
    left, right = evaluate_value(node.left, env), evaluate_value(node.right, env)
    if _is_scalar(left) or _is_scalar(right) or _kind(left) != _kind(right):
        raise _mismatch(
            node, f"tensor product needs two vectors or two operators, got {_kind(left)} and {_kind(right)}"
        )
    return left, right


def _eval_tensor_at(node, env):
    left, right = _tensor_operands(node, env)
    return tensor_at(left, node.index_set, right)


def _eval_tensor(node, env):
    left, right = _tensor_operands(node, env)
    return tensor(left, right)


def _operator_operand(node, env, what):
    value = evaluate_value(node.operand, env)
    if not isinstance(value, QOperator):
        raise _mismatch(node, f"{what} needs a density operator, got {_kind(value)}; wrap vectors in dm(...)")
    return value


def _eval_prefix(node, env):
    return prefix(_operator_operand(node, env, "prefix"), node.length)


def _eval_restrict(node, env):
    return restrict(_operator_operand(node, env, "restriction"), node.index_set)


def _eval_inner(node, env):
    left, right = evaluate_value(node.left, env), evaluate_value(node.right, env)
    if not (isinstance(left, QVector) and isinstance(right, QVector)):
        raise _mismatch(node, f"inner product needs two vectors, got {_kind(left)} and {_kind(right)}")
    return inner_product(left, right)


def _eval_density(node, env):
    value = evaluate_value(node.operand, env)
    if not isinstance(value, QVector):
        raise _mismatch(node, f"dm(...) needs a vector, got {_kind(value)}")
    return density_from_vector(value)


def _eval_norm(node, env):
    value = evaluate_value(node.operand, env)
    if isinstance(value, QVector):
        return value.norm
    if isinstance(value, QOperator):
        # Frobenius norm
        return math.sqrt(sum(abs(c) ** 2 for c in value.entries.values()))
    return abs(value)


def _eval_program(node, env):
    scope = dict(env)
    for statement in node.statements:
        scope[statement.name] = evaluate_value(statement.value, MappingProxyType(scope))
        logger.debug(f"Bound {statement.name} to a {_kind(scope[statement.name])}")
    return evaluate_value(node.result, MappingProxyType(scope))


def _eval_let(node, env):
    raise _mismatch(node, "'let' is only valid as a program statement")


_EVALUATORS = {
    KetLiteral: _eval_ket,
    ScalarLiteral: _eval_scalar,
    Variable: _eval_variable,
    Add: _eval_add,
    Sub: _eval_sub,
    ScalarMul: _eval_scalar_mul,
    Concat: _eval_concat,
    TensorAt: _eval_tensor_at,
    Tensor: _eval_tensor,
    Prefix: _eval_prefix,
    Restrict: _eval_restrict,
    Inner: _eval_inner,
    Density: _eval_density,
    Norm: _eval_norm,
    Let: _eval_let,
    Program: _eval_program,
}


def evaluate_value(node, env=None):
    """Evaluate `node` and return the bare value."""
    env = {} if env is None else env
    handler = _EVALUATORS.get(type(node))
    if handler is None:
        raise EvaluationError(f"cannot evaluate {type(node).__name__}")
    return handler(node, env)


def evaluate(node, env=None, tol=None):
    """
    Evaluate a syntax tree.

    Args:
        node: Expression or Program
        env (Mapping): Variable bindings (not modified)
        tol (float): Tolerance for the `normalized` flag

    Returns:
        Evaluation: The value with its norm annotation

    Raises:
        EvaluationError: On type mismatches and unbound variables
    """
    tol = resolve_tolerance(tol)
    value = evaluate_value(node, env)
    if isinstance(value, QVector):
        norm = value.norm
    elif isinstance(value, QOperator):
        norm = value.trace.real
    else:
        return Evaluation(value)
    return Evaluation(value, norm, abs(norm - 1) <= tol)


def evaluate_bindings(statements, env=None):
    """
    Evaluate `let` statements in order.

    Returns:
        dict: `env` extended with one entry per statement
    """
    scope = dict(env or {})
    for statement in statements:
        scope[statement.name] = evaluate_value(statement.value, MappingProxyType(scope))
    return scope
