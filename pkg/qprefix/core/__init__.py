"""Classical strings, sparse vectors/operators over the string space, and lengths."""

from qprefix.core.strings import EMPTY, BitString, enumerate_bitstrings, parse_bitstring
from qprefix.core.states import LAMBDA, QOperator, QVector, density_from_vector, inner_product
from qprefix.core.lengths import (
    average_length,
    base_length,
    is_length_eigenstate,
    length_observable,
    length_weight,
    supported_lengths,
)

__all__ = [
    "EMPTY", "LAMBDA", "BitString", "QOperator", "QVector",
    "average_length", "base_length", "density_from_vector", "enumerate_bitstrings",
    "inner_product", "is_length_eigenstate", "length_observable", "length_weight",
    "parse_bitstring", "supported_lengths",
]
