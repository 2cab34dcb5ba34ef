"""Tape embedding, restriction, tensor products, concatenation and the dense oracle."""

from qprefix.tape.index_sets import IndexSet
from qprefix.tape.embedding import BLANK, TapeState, embed, extract, is_bit_string_configuration
from qprefix.tape.operations import (
    NormalizationReport,
    concat,
    normalization_report,
    prefix,
    restrict,
    tensor,
    tensor_at,
)
from qprefix.tape.oracle import check_oracle_guard, duality_trial, oracle_restrict, restriction_trial

__all__ = [
    "BLANK", "IndexSet", "NormalizationReport", "TapeState",
    "check_oracle_guard", "concat", "duality_trial", "embed", "extract", "is_bit_string_configuration",
    "normalization_report", "oracle_restrict", "prefix", "restrict", "restriction_trial",
    "tensor", "tensor_at",
]
