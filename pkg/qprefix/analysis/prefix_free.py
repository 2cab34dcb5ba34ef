#!/usr/bin/env python3
"""
Prefix-freeness of sets of qubit strings.

A set M is prefix-free when ⟨φ|ψ∘s⟩ = 0 for all φ, ψ in M and every
classical s ≠ λ (condition 1). Three equivalent formulations are checked
independently:

    2. ⟨φ|ψ∘χ⟩ = 0 for every qubit string χ ⊥ |λ⟩
    3. ⟨φ∘t|ψ∘s⟩ = 0 for classical s ≠ t
    4. ⟨φ∘τ|ψ∘χ⟩ = 0 for qubit strings τ ⊥ χ

Conditions 2 and 4 quantify over qubit strings. Both are linear in the
suffixes, so they reduce to the classical-suffix basis: for 2 the worst χ
is the normalized conjugate of the coefficient vector c_s = ⟨φ|ψ∘s⟩, and
for 4 the form G_ts = ⟨φ∘t|ψ∘s⟩ must be a multiple of the identity.

Suffixes are enumerated up to length max_i ℓ(e_i): every term of ψ∘s is
longer than ℓ(s), so ⟨φ|ψ∘s⟩ vanishes once ℓ(s) > ℓ(φ). Witnesses are the
first failure in vector order, then suffix order (by length, then
lexicographic).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from qprefix.config import resolve_tolerance
from qprefix.core.lengths import base_length
from qprefix.core.states import LAMBDA, QVector, density_from_vector, inner_product
from qprefix.core.strings import enumerate_bitstrings
from qprefix.analysis.codes import CodeSet
from qprefix.tape.operations import concat, prefix
from qprefix.utils.rendering import format_scalar, render_vector

logger = logging.getLogger(__name__)

CONDITIONS = (1, 2, 3, 4)


def _suffix_text(name, vector):
    if len(vector) == 1:
        (string, amplitude), = vector.items()
        if abs(amplitude - 1) < 1e-12:
            return f"{name}={string}"
    return f"{name}={render_vector(vector)}"


@dataclass(frozen=True)
class PrefixWitness:
    """
    A failure of prefix-freeness: ⟨φ∘τ|ψ∘χ⟩ ≠ 0.

    Attributes:
        condition: Condition that produced the witness (1-4)
        left_index: Position of φ in the code set
        right_index: Position of ψ in the code set
        right_suffix: χ (a classical basis vector for conditions 1 and 3)
        left_suffix: τ (|λ⟩ for conditions 1 and 2)
        overlap: The nonzero value found
    """

    condition: int
    left_index: int
    right_index: int
    right_suffix: QVector
    left_suffix: QVector
    overlap: complex

    def recompute(self, code_set):
        """Re-evaluate ⟨φ∘τ|ψ∘χ⟩ on `code_set`."""
        code_set = CodeSet.coerce(code_set)
        left = concat(code_set[self.left_index], self.left_suffix)
        right = concat(code_set[self.right_index], self.right_suffix)
        return inner_product(left, right)

    def describe(self):
        """Short text such as 's=0 overlap 0.5'."""
        if self.condition == 1:
            suffixes = _suffix_text("s", self.right_suffix)
        elif self.condition == 2:
            suffixes = _suffix_text("chi", self.right_suffix)
        elif self.condition == 3:
            suffixes = f"{_suffix_text('t', self.left_suffix)} {_suffix_text('s', self.right_suffix)}"
        else:
            suffixes = f"{_suffix_text('tau', self.left_suffix)} {_suffix_text('chi', self.right_suffix)}"
        return f"{suffixes} overlap {format_scalar(self.overlap)}"

    def to_dict(self, code_set=None):
        data = {
            "condition": self.condition,
            "left_index": self.left_index,
            "right_index": self.right_index,
            "left_suffix": render_vector(self.left_suffix),
            "right_suffix": render_vector(self.right_suffix),
            "overlap": {"re": self.overlap.real, "im": self.overlap.imag},
            "description": self.describe(),
        }
        if code_set is not None:
            data["left_label"] = code_set.labels[self.left_index]
            data["right_label"] = code_set.labels[self.right_index]
        return data


@dataclass(frozen=True)
class PrefixFreeVerdict:
    is_prefix_free: bool
    condition_used: int
    witness: PrefixWitness = None
    max_suffix_length: int = 0

    def to_dict(self, code_set=None):
        return {
            "condition": self.condition_used,
            "prefix_free": self.is_prefix_free,
            "max_suffix_length": self.max_suffix_length,
            "witness": None if self.witness is None else self.witness.to_dict(code_set),
        }


def _extensions(vector, suffixes):
    return [concat(vector, QVector.basis(s)) for s in suffixes]


def _condition_one(code_set, max_len, tol):
    suffixes = list(enumerate_bitstrings(max_len, min_length=1))
    images = [_extensions(v, suffixes) for v in code_set]
    for i, phi in enumerate(code_set):
        for j in range(len(code_set)):
            for s, extended in zip(suffixes, images[j]):
                overlap = inner_product(phi, extended)
                if abs(overlap) > tol:
                    return PrefixWitness(1, i, j, QVector.basis(s), LAMBDA, overlap)
    return None


def _condition_two(code_set, max_len, tol):
    suffixes = list(enumerate_bitstrings(max_len, min_length=1))
    images = [_extensions(v, suffixes) for v in code_set]
    for i, phi in enumerate(code_set):
        for j in range(len(code_set)):
            # χ ↦ ⟨φ|ψ∘χ⟩ = Σ_s c_s χ_s is maximized by χ = conj(c)/‖c‖
            coefficients = np.array([inner_product(phi, extended) for extended in images[j]])
            magnitude = float(np.linalg.norm(coefficients))
            if magnitude > tol:
                chi = QVector(zip(suffixes, coefficients.conj() / magnitude))
                return PrefixWitness(2, i, j, chi, LAMBDA, complex(magnitude))
    return None


def _condition_three(code_set, max_len, tol):
    suffixes = list(enumerate_bitstrings(max_len))
    images = [_extensions(v, suffixes) for v in code_set]
    for i in range(len(code_set)):
        for j in range(len(code_set)):
            for t, left in zip(suffixes, images[i]):
                for s, right in zip(suffixes, images[j]):
                    if s == t:
                        continue
                    overlap = inner_product(left, right)
                    if abs(overlap) > tol:
                        return PrefixWitness(3, i, j, QVector.basis(s), QVector.basis(t), overlap)
    return None


def _condition_four(code_set, max_len, tol):
    suffixes = list(enumerate_bitstrings(max_len))
    images = [_extensions(v, suffixes) for v in code_set]
    n = len(suffixes)
    for i in range(len(code_set)):
        for j in range(len(code_set)):
            gram = np.array([
                [inner_product(images[i][a], images[j][b]) for b in range(n)]
                for a in range(n)
            ])
            off_diagonal = gram - np.diag(np.diag(gram))
            rows, cols = np.nonzero(np.abs(off_diagonal) > tol)
            if len(rows):
                t, s = suffixes[rows[0]], suffixes[cols[0]]
                return PrefixWitness(
                    4, i, j, QVector.basis(s), QVector.basis(t), complex(gram[rows[0], cols[0]])
                )
            drift = np.nonzero(np.abs(np.diag(gram) - gram[0, 0]) > tol)[0]
            if len(drift):
                u = suffixes[drift[0]]
                tau = (LAMBDA + QVector.basis(u)) / math.sqrt(2)
                chi = (LAMBDA - QVector.basis(u)) / math.sqrt(2)
                overlap = inner_product(concat(code_set[i], tau), concat(code_set[j], chi))
                return PrefixWitness(4, i, j, chi, tau, overlap)
    return None


_CHECKS = {1: _condition_one, 2: _condition_two, 3: _condition_three, 4: _condition_four}


def check_prefix_free(code_set, condition=1, max_suffix_len=None, tol=None):
    """
    Check one of the four equivalent prefix-free conditions.

    Args:
        code_set (CodeSet or iterable of QVector): The set M
        condition (int): Which formulation to check (1-4)
        max_suffix_len (int): Longest classical suffix to enumerate
            (default: the largest base length in M, which is sufficient)
        tol (float): Overlaps at or below this magnitude count as zero

    Returns:
        PrefixFreeVerdict: With the first witness on failure
    """
    if condition not in _CHECKS:
        raise ValueError(f"condition must be one of {CONDITIONS}, got {condition!r}")
    tol = resolve_tolerance(tol)
    code_set = CodeSet.coerce(code_set)
    max_len = code_set.max_base_length(tol) if max_suffix_len is None else max_suffix_len
    witness = _CHECKS[condition](code_set, max_len, tol)
    if witness is not None:
        logger.debug(f"Condition {condition} fails: {witness.describe()}")
    return PrefixFreeVerdict(witness is None, condition, witness, max_len)


def check_all_conditions(code_set, max_suffix_len=None, tol=None):
    """Verdicts for conditions 1-4, in order."""
    return [check_prefix_free(code_set, c, max_suffix_len, tol) for c in CONDITIONS]


def conditions_agree(code_set, max_suffix_len=None, tol=None):
    """True iff all four conditions reach the same verdict."""
    verdicts = check_all_conditions(code_set, max_suffix_len, tol)
    return len({v.is_prefix_free for v in verdicts}) == 1


def distinguishability(phi, psi, tol=None):
    """
    ⟨ψ|φ^{ℓ(ψ)}|ψ⟩: how much of φ a measurement on ψ's first ℓ(ψ) qubits
    cannot tell apart from ψ.

    Args:
        phi (QVector): State being tested
        psi (QVector): Nonzero reference state

    Returns:
        float: In [0, 1] for normalized inputs
    """
    n = base_length(psi, tol)
    truncated = prefix(density_from_vector(phi, allow_unnormalized=True), n)
    return float(truncated.expectation(psi).real)


def distinguishes_all(code_set, tol=None):
    """
    True iff distinguishability vanishes for every ordered pair of distinct
    members. For orthonormal systems of length eigenstates this is
    equivalent to prefix-freeness.
    """
    tol = resolve_tolerance(tol)
    code_set = CodeSet.coerce(code_set)
    for i, phi in enumerate(code_set):
        for j, psi in enumerate(code_set):
            if i != j and distinguishability(phi, psi, tol) > tol:
                return False
    return True
