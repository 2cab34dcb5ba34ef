#!/usr/bin/env python3
"""
Tokenizer and recursive-descent parser for qubit-string expressions.

    program   := statement (';' statement)* [';']
    statement := 'let' NAME '=' sum | sum
    sum       := product (('+' | '-') product)*
    product   := scaled (('.' | '(x)' [tensor_set]) scaled)*
    scaled    := unary ('*' unary)*
    unary     := '-' unary | postfix
    postfix   := primary ('^' INT | '[' restriction ']')*
    primary   := KET | scalar | NAME | '(' sum ')' | '<' sum ('|' sum '>' | KET)
               | 'dm' '(' sum ')' | 'norm' '(' sum ')'
    scalar    := (NUMBER | 'sqrt' '(' NUMBER ')') ('/' (NUMBER | 'sqrt' '(' NUMBER ')'))*

The full grammar, including the index-set literals, is in docs/grammar.ebnf.
Every error is a DslSyntaxError with line, column and the expected tokens.
"""

import logging
import re
from collections import namedtuple
from fractions import Fraction

from qprefix.core.strings import parse_bitstring
from qprefix.errors import DslSyntaxError, IndexSetError
from qprefix.dsl.nodes import (
    Add, Concat, Density, Inner, KetLiteral, Let, Norm, Prefix, Program, Restrict,
    ScalarLiteral, ScalarMul, Sub, Tensor, TensorAt, Variable,
)
from qprefix.tape.index_sets import IndexSet

logger = logging.getLogger(__name__)

Token = namedtuple("Token", ["kind", "text", "line", "column"])

KEYWORDS = frozenset({"let", "dm", "norm", "sqrt", "inf", "e", "x"})
MAX_NESTING = 64

_TOKEN_SPEC = [
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+"),
    ("KET", r"\|(?:[01]+|e|λ)>"),
    ("TENSOR", r"\(x\)|⊗"),
    ("NUMBER", r"\d+(?:\.\d+)?"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("OP", r"[-+*/.∘^()\[\]{}<>|,:;=]"),
    ("MISMATCH", r"."),
]
token_pat = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))

_PRIMARY_START = ("ket", "number", "name", "(", "<", "dm", "norm", "sqrt", "-")
_AFTER_EXPRESSION = ("+", "-", ".", "(x)", "*", "^", "[", ";", "end of input")


def tokenize(text):
    """
    Split `text` into tokens.

    Keywords and single-character operators use their own text as kind;
    '∘' is normalized to '.', '⊗' to '(x)'.

    Raises:
        DslSyntaxError: On a character outside the language
    """
    tokens = []
    line, line_start = 1, 0
    for match in token_pat.finditer(text):
        kind, value = match.lastgroup, match.group()
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
            continue
        if kind == "SKIP":
            continue
        if kind == "MISMATCH":
            raise DslSyntaxError(f"unexpected character {value!r}", line, column)
        if kind == "NAME" and value in KEYWORDS:
            kind = value
        elif kind == "OP":
            kind = "." if value == "∘" else value
        elif kind == "TENSOR":
            kind = "(x)"
        tokens.append(Token(kind, value, line, column))
    tokens.append(Token("EOF", "", line, len(text) - line_start + 1))
    return tokens


def _describe(token):
    return "end of input" if token.kind == "EOF" else repr(token.text)


class Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    # Token helpers

    @property
    def token(self):
        return self.tokens[self.pos]

    def at(self, *kinds):
        return self.token.kind in kinds

    def advance(self):
        token = self.token
        if token.kind != "EOF":
            self.pos += 1
        return token

    def error(self, message, expected=(), token=None):
        token = self.token if token is None else token
        return DslSyntaxError(message, token.line, token.column, expected)

    def expect(self, kind, message=None):
        if not self.at(kind):
            raise self.error(message or f"unexpected {_describe(self.token)}", expected=(kind,))
        return self.advance()

    def enter(self):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise self.error("expression nested too deeply")

    def leave(self):
        self.depth -= 1

    # Statements

    def parse_program(self):
        statements = []
        result = None
        while True:
            if self.at("let"):
                statements.append(self.parse_let())
            else:
                result = self.parse_sum()
            if not self.at(";"):
                break
            self.advance()
            if self.at("EOF"):
                break
            if result is not None:
                raise self.error("only the last statement may be an expression", expected=("let",))
        if not self.at("EOF"):
            raise self.error(f"unexpected {_describe(self.token)}", expected=_AFTER_EXPRESSION)
        if result is None:
            raise self.error("program ends without an expression", expected=_PRIMARY_START)
        if not statements:
            return result
        return Program(tuple(statements), result, span=statements[0].span)

    def parse_let(self):
        start = self.advance()
        name = self.expect("NAME", "expected a variable name after 'let'")
        self.expect("=")
        return Let(name.text, self.parse_sum(), span=(start.line, start.column))

    # Expressions, loosest binding first

    def parse_sum(self):
        self.enter()
        left = self.parse_product()
        while self.at("+", "-"):
            op = self.advance()
            right = self.parse_product()
            node = Add if op.kind == "+" else Sub
            left = node(left, right, span=left.span)
        self.leave()
        return left

    def parse_product(self):
        left = self.parse_scaled()
        while self.at(".", "(x)"):
            op = self.advance()
            if op.kind == ".":
                left = Concat(left, self.parse_scaled(), span=left.span)
            elif self.at("["):
                index_set = self.parse_index_literal()
                left = TensorAt(left, index_set, self.parse_scaled(), span=left.span)
            else:
                left = Tensor(left, self.parse_scaled(), span=left.span)
        return left

    def parse_scaled(self):
        left = self.parse_unary()
        while self.at("*"):
            self.advance()
            left = ScalarMul(left, self.parse_unary(), span=left.span)
        return left

    def parse_unary(self):
        if not self.at("-"):
            return self.parse_postfix()
        start = self.advance()
        self.enter()
        operand = self.parse_unary()
        self.leave()
        span = (start.line, start.column)
        if isinstance(operand, ScalarLiteral):
            return ScalarLiteral(-operand.value, operand.root, span=span)
        return ScalarMul(ScalarLiteral(Fraction(-1)), operand, span=span)

    def parse_postfix(self):
        node = self.parse_primary()
        while self.at("^", "["):
            if self.advance().kind == "^":
                node = Prefix(node, self.parse_integer(), span=node.span)
            else:
                node = Restrict(node, self.parse_restriction(), span=node.span)
        return node

    def parse_primary(self):
        token = self.token
        span = (token.line, token.column)
        if token.kind == "KET":
            self.advance()
            return KetLiteral(parse_bitstring(token.text[1:-1]), span=span)
        if token.kind in ("NUMBER", "sqrt"):
            return self.parse_scalar()
        if token.kind == "NAME":
            self.advance()
            return Variable(token.text, span=span)
        if token.kind == "(":
            self.advance()
            inner = self.parse_sum()
            self.expect(")", "unbalanced parenthesis")
            return inner
        if token.kind == "<":
            return self.parse_inner()
        if token.kind in ("dm", "norm"):
            self.advance()
            self.expect("(")
            operand = self.parse_sum()
            self.expect(")", "unbalanced parenthesis")
            node = Density if token.kind == "dm" else Norm
            return node(operand, span=span)
        if token.kind == "|":
            raise self.error("unbalanced ket delimiter", expected=("ket",))
        raise self.error(f"unexpected {_describe(token)}", expected=_PRIMARY_START)

    def parse_inner(self):
        start = self.advance()
        left = self.parse_sum()
        if self.at("KET"):
            # <a|0> : the ket's closing '>' ends the bracket
            token = self.advance()
            right = KetLiteral(parse_bitstring(token.text[1:-1]), span=(token.line, token.column + 1))
        else:
            self.expect("|", "expected '|' between bra and ket")
            right = self.parse_sum()
            self.expect(">", "unbalanced bra-ket bracket")
        return Inner(left, right, span=(start.line, start.column))

    # Literals

    def parse_integer(self):
        token = self.token
        if token.kind != "NUMBER" or "." in token.text:
            raise self.error("expected a non-negative integer", expected=("integer",))
        self.advance()
        return int(token.text)

    def _scalar_factor(self):
        """NUMBER or sqrt(NUMBER) as (rational part, radicand); sqrt(k) = k/√k."""
        if self.at("sqrt"):
            self.advance()
            self.expect("(")
            radicand = self.parse_integer()
            self.expect(")", "unbalanced parenthesis")
            return Fraction(radicand), radicand
        token = self.expect("NUMBER", "expected a number")
        return Fraction(token.text), 1

    def parse_scalar(self):
        start = self.token
        value, root = self._scalar_factor()
        while self.at("/"):
            slash = self.advance()
            divisor, radicand = self._scalar_factor()
            if divisor == 0:
                raise self.error("division by zero in scalar literal", token=slash)
            value /= divisor
            if radicand != 1:
                value *= radicand
                root *= radicand
        if root == 0:
            raise self.error("sqrt(0) cannot appear in a scalar literal", token=start)
        return ScalarLiteral(value, root, span=(start.line, start.column))

    def _index_set(self, token, factory, *args):
        try:
            return factory(*args)
        except IndexSetError as e:
            raise self.error(str(e), token=token) from e

    def _index_members(self):
        """'{' [INT (',' INT)*] '}' as a finite IndexSet."""
        brace = self.expect("{")
        members = []
        if not self.at("}"):
            members.append(self.parse_integer())
            while self.at(","):
                self.advance()
                members.append(self.parse_integer())
        self.expect("}", "unbalanced brace in index set")
        if len(set(members)) != len(members) or any(m < 1 for m in members):
            raise self.error("malformed index set", token=brace)
        return self._index_set(brace, IndexSet.finite, members)

    def _range(self, separator, closers):
        """m SEP (n | inf) after the opening bracket; returns an IndexSet."""
        start_token = self.token
        start = self.parse_integer()
        self.expect(separator)
        if self.at("inf"):
            self.advance()
            self.expect(closers[1])
            if start < 1:
                raise self.error("malformed index range", token=start_token)
            return self._index_set(start_token, IndexSet.tail, start)
        stop = self.parse_integer()
        self.expect(closers[0])
        if start < 1 or stop < start:
            raise self.error("malformed index range", token=start_token)
        return self._index_set(start_token, IndexSet.interval, start, stop)

    def parse_index_literal(self):
        """
        Tensor index set: [m,n], [m,inf), {i,...} or any of these in
        brackets ([[m,n]], [{i,...}], [[m,inf)]).
        """
        if self.at("{"):
            return self._index_members()
        self.expect("[")
        if self.at("{"):
            index_set = self._index_members()
            self.expect("]", "unbalanced bracket in index set")
            return index_set
        if self.at("["):
            self.advance()
            index_set = self._range(",", ("]", ")"))
            self.expect("]", "unbalanced bracket in index set")
            return index_set
        return self._range(",", ("]", ")"))

    def parse_restriction(self):
        """After '[': m:n], m:inf] or {i,...}]."""
        if self.at("{"):
            index_set = self._index_members()
        else:
            start_token = self.token
            start = self.parse_integer()
            self.expect(":")
            if self.at("inf"):
                self.advance()
                if start < 1:
                    raise self.error("malformed index range", token=start_token)
                index_set = self._index_set(start_token, IndexSet.tail, start)
            else:
                stop = self.parse_integer()
                if start < 1 or stop < start:
                    raise self.error("malformed index range", token=start_token)
                index_set = self._index_set(start_token, IndexSet.interval, start, stop)
        self.expect("]", "unbalanced bracket in restriction")
        return index_set


def parse(text):
    """
    Parse an expression or a `let ...; expr` program.

    Args:
        text (str): Source text

    Returns:
        The syntax tree (a Program only when `let` statements are present)

    Raises:
        DslSyntaxError: With line, column and expected tokens
    """
    tree = Parser(text).parse_program()
    logger.debug(f"Parsed {len(text)} characters into {type(tree).__name__}")
    return tree


def parse_index_set(text):
    """
    Parse a stand-alone index-set literal such as "[2,4]", "{1,3}" or "[3,inf)".

    Raises:
        DslSyntaxError: On malformed input
    """
    parser = Parser(text)
    index_set = parser.parse_index_literal()
    if not parser.at("EOF"):
        raise parser.error(f"unexpected {_describe(parser.token)}", expected=("end of input",))
    return index_set


def parse_bindings(text):
    """
    Parse a bindings file: `let` statements only, separated by ';'.

    Returns:
        tuple[Let]: The statements in file order

    Raises:
        DslSyntaxError: On malformed input or a bare expression
    """
    parser = Parser(text)
    statements = []
    while not parser.at("EOF"):
        if not parser.at("let"):
            raise parser.error("binding files may only contain 'let' statements", expected=("let",))
        statements.append(parser.parse_let())
        if parser.at(";"):
            parser.advance()
        elif not parser.at("EOF", "let"):
            raise parser.error(f"unexpected {_describe(parser.token)}", expected=(";", "let"))
    return tuple(statements)
