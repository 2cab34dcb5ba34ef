"""
Exception hierarchy for qprefix.

Every exception carries the exit code the command-line front end reports
for it: 2 for malformed input, 3 for violated preconditions, 4 for
resource guards.
"""


class QPrefixError(Exception):
    """Base class for all qprefix errors."""

    exit_code = 3


# Input errors (exit 2)

class BitStringParseError(QPrefixError, ValueError):
    """A character other than '0' or '1' appeared in a bit string."""

    exit_code = 2

    def __init__(self, text, position):
        self.text = text
        self.position = position
        char = text[position - 1] if 0 < position <= len(text) else ""
        super().__init__(
            f"invalid character {char!r} at position {position} in bit string {text!r}"
        )


class DslSyntaxError(QPrefixError, ValueError):
    """Malformed expression; carries line, column and the expected tokens."""

    exit_code = 2

    def __init__(self, message, line, column, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"{line}:{column}: {message}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


class CodebookFormatError(QPrefixError, ValueError):
    """A codebook file failed to parse or validate."""

    exit_code = 2


class IndexSetError(QPrefixError, ValueError):
    """A malformed index set, or one naming cells beyond MAX_CELL_INDEX."""

    exit_code = 2


# Precondition errors (exit 3)

class EmptySupportError(QPrefixError, ValueError):
    """A length query was made on the zero vector or operator."""


class NormalizationError(QPrefixError, ValueError):
    """A state vector was required but the input is not normalized."""


class NotDensityError(QPrefixError, ValueError):
    """An operator failed the trace, hermiticity or positivity check."""


class CapacityError(QPrefixError, ValueError):
    """A qubit string does not fit into the available tape cells."""


class LengthEigenstateError(QPrefixError, ValueError):
    """The plain tensor product requires a length eigenstate on the left."""


class NotOrthonormalError(QPrefixError, ValueError):
    """A code set is not orthonormal; carries the offending pair."""

    def __init__(self, first, second, overlap):
        self.first = first
        self.second = second
        self.overlap = overlap
        super().__init__(
            f"vectors {first} and {second} are not orthonormal: inner product {overlap:.10g}"
        )


class NotUnitaryError(QPrefixError, ValueError):
    """A basis rotation matrix is not unitary."""


class EvaluationError(QPrefixError, TypeError):
    """Type mismatch or unbound variable while evaluating an expression."""


# Resource guards (exit 4)

class OracleGuardError(QPrefixError, ValueError):
    """The dense tape oracle was asked for more cells than it may allocate."""

    exit_code = 4
