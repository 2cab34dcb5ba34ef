"""Expression language for qubit strings: parser, syntax tree and evaluator."""

from qprefix.dsl.nodes import (
    Add, Concat, Density, Inner, KetLiteral, Let, Norm, Prefix, Program, Restrict,
    ScalarLiteral, ScalarMul, Sub, Tensor, TensorAt, Variable, pretty_print,
)
from qprefix.dsl.parser import KEYWORDS, parse, parse_bindings, parse_index_set, tokenize
from qprefix.dsl.evaluator import Evaluation, evaluate, evaluate_bindings, evaluate_value


def run(text, env=None, tol=None):
    """Parse and evaluate `text` in one step."""
    return evaluate(parse(text), env, tol)


__all__ = [
    "KEYWORDS", "Add", "Concat", "Density", "Evaluation", "Inner", "KetLiteral", "Let", "Norm",
    "Prefix", "Program", "Restrict", "ScalarLiteral", "ScalarMul", "Sub", "Tensor",
    "TensorAt", "Variable", "evaluate", "evaluate_bindings", "evaluate_value", "parse",
    "parse_bindings", "parse_index_set",
    "pretty_print", "run", "tokenize",
]
