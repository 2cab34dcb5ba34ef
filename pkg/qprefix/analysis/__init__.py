"""Prefix-free verification, orthonormal bases and the quantum Kraft inequality."""

from qprefix.analysis.codes import CodeSet, check_orthonormal, is_orthonormal
from qprefix.analysis.prefix_free import (
    CONDITIONS,
    PrefixFreeVerdict,
    PrefixWitness,
    check_all_conditions,
    check_prefix_free,
    conditions_agree,
    distinguishability,
    distinguishes_all,
)
from qprefix.analysis.orthonormal import (
    basis_rotation_preserves,
    orthonormalize,
    rotate,
    subspace_length_weight,
)
from qprefix.analysis.kraft import (
    KraftContribution,
    KraftReport,
    full_weight,
    kraft_report,
    weight,
    weight_by_enumeration,
)

__all__ = [
    "CONDITIONS", "CodeSet", "KraftContribution", "KraftReport", "PrefixFreeVerdict",
    "PrefixWitness", "basis_rotation_preserves", "check_all_conditions", "check_orthonormal",
    "check_prefix_free", "conditions_agree", "distinguishability", "distinguishes_all",
    "full_weight", "is_orthonormal", "kraft_report", "orthonormalize", "rotate",
    "subspace_length_weight", "weight", "weight_by_enumeration",
]
