#!/usr/bin/env python3
"""
Syntax tree of the qubit-string expression language, and its pretty printer.

Nodes are frozen dataclasses. Every node carries the (line, column) of its
first token in `span`; spans are ignored by equality, so a tree printed
with `pretty_print` and parsed back compares equal to the original.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from qprefix.core.strings import BitString
from qprefix.tape.index_sets import IndexSet


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class KetLiteral:
    string: BitString
    span: tuple = _span()


@dataclass(frozen=True)
class ScalarLiteral:
    """The number value/√root."""

    value: Fraction
    root: int = 1
    span: tuple = _span()

    def __float__(self):
        return float(self.value) / math.sqrt(self.root)


@dataclass(frozen=True)
class Variable:
    name: str
    span: tuple = _span()


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class Sub:
    left: object
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class ScalarMul:
    left: object
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class Concat:
    left: object
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class TensorAt:
    left: object
    index_set: IndexSet
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class Prefix:
    operand: object
    length: int
    span: tuple = _span()


@dataclass(frozen=True)
class Restrict:
    operand: object
    index_set: IndexSet
    span: tuple = _span()


@dataclass(frozen=True)
class Inner:
    left: object
    right: object
    span: tuple = _span()


@dataclass(frozen=True)
class Density:
    operand: object
    span: tuple = _span()


@dataclass(frozen=True)
class Norm:
    operand: object
    span: tuple = _span()


@dataclass(frozen=True)
class Let:
    name: str
    value: object
    span: tuple = _span()


@dataclass(frozen=True)
class Program:
    statements: tuple
    result: object
    span: tuple = _span()


# Binding strength, loosest first
SUM, PRODUCT, SCALED, UNARY, POSTFIX, ATOM = range(1, 7)

_BINARY = {Add: (SUM, "+"), Sub: (SUM, "-"), Concat: (PRODUCT, "."),
           Tensor: (PRODUCT, "(x)"), ScalarMul: (SCALED, "*")}


def precedence(node):
    if type(node) in _BINARY:
        return _BINARY[type(node)][0]
    if isinstance(node, TensorAt):
        return PRODUCT
    if isinstance(node, ScalarLiteral) and node.value < 0:
        return UNARY
    if isinstance(node, (Prefix, Restrict)):
        return POSTFIX
    return ATOM


def _wrap(node, parenthesize):
    text = pretty_print(node)
    return f"({text})" if parenthesize else text


def format_scalar_literal(node):
    value = node.value
    text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if node.root != 1:
        text += f"/sqrt({node.root})"
    return text


def format_tensor_index_set(index_set):
    """Index-set literal following (x): [m,n], [m,inf) or [{i,j,...}]."""
    bounds = index_set.as_interval()
    if bounds is not None:
        start, stop = bounds
        return f"[{start},inf)" if stop is None else f"[{start},{stop}]"
    if index_set.is_finite:
        return "[{" + ",".join(str(i) for i in index_set.members) + "}]"
    raise ValueError(f"index set {index_set} has no literal form")


def format_restriction(index_set):
    """Postfix restriction: [m:n], [m:inf] or [{i,j,...}]."""
    bounds = index_set.as_interval()
    if bounds is not None:
        start, stop = bounds
        return f"[{start}:inf]" if stop is None else f"[{start}:{stop}]"
    if index_set.is_finite:
        return "[{" + ",".join(str(i) for i in index_set.members) + "}]"
    raise ValueError(f"index set {index_set} has no literal form")


def pretty_print(node):
    """
    Render a tree in canonical surface syntax.

    Parentheses are added only where precedence or left associativity
    requires them, so parse(pretty_print(tree)) == tree.
    """
    kind = type(node)
    if kind in _BINARY:
        level, symbol = _BINARY[kind]
        separator = symbol if kind is ScalarMul else f" {symbol} "
        left = _wrap(node.left, precedence(node.left) < level)
        right = _wrap(node.right, precedence(node.right) <= level)
        return f"{left}{separator}{right}"
    if kind is TensorAt:
        left = _wrap(node.left, precedence(node.left) < PRODUCT)
        right = _wrap(node.right, precedence(node.right) <= PRODUCT)
        return f"{left} (x){format_tensor_index_set(node.index_set)} {right}"
    if kind is KetLiteral:
        return f"|{node.string}>"
    if kind is ScalarLiteral:
        return format_scalar_literal(node)
    if kind is Variable:
        return node.name
    if kind is Prefix:
        return f"{_wrap(node.operand, precedence(node.operand) < POSTFIX)}^{node.length}"
    if kind is Restrict:
        operand = _wrap(node.operand, precedence(node.operand) < POSTFIX)
        return f"{operand}{format_restriction(node.index_set)}"
    if kind is Inner:
        return f"<{pretty_print(node.left)} | {pretty_print(node.right)}>"
    if kind is Density:
        return f"dm({pretty_print(node.operand)})"
    if kind is Norm:
        return f"norm({pretty_print(node.operand)})"
    if kind is Let:
        return f"let {node.name} = {pretty_print(node.value)}"
    if kind is Program:
        return "; ".join([pretty_print(s) for s in node.statements] + [pretty_print(node.result)])
    raise TypeError(f"not a syntax tree node: {node!r}")
