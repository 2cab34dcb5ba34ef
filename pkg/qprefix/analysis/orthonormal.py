#!/usr/bin/env python3
"""
Orthonormal bases of spans, basis rotations and Tr(2^{-Λ}P).
"""

import logging

import numpy as np

from qprefix.config import RANK_TOLERANCE, resolve_tolerance
from qprefix.core.lengths import length_weight
from qprefix.core.states import QVector, inner_product
from qprefix.errors import NotOrthonormalError, NotUnitaryError
from qprefix.analysis.codes import CodeSet, check_orthonormal
from qprefix.analysis.prefix_free import check_prefix_free

logger = logging.getLogger(__name__)


def orthonormalize(spanning, labels=None, rank_tol=RANK_TOLERANCE):
    """
    Modified Gram-Schmidt over the input order.

    Args:
        spanning: Iterable of QVectors (zero and dependent vectors allowed)
        labels: Optional label per input vector; kept for surviving vectors
        rank_tol (float): Residual norms below this are dropped

    Returns:
        CodeSet: Orthonormal basis of the span
    """
    spanning = list(spanning)
    labels = list(labels) if labels else [f"e_{i}" for i in range(1, len(spanning) + 1)]
    basis, kept = [], []
    for v, label in zip(spanning, labels):
        residual = v
        for e in basis:
            residual = residual - inner_product(e, residual) * e
        norm = residual.norm
        if norm < rank_tol:
            logger.debug(f"Dropping {label}: residual norm {norm:.3g} below rank tolerance")
            continue
        basis.append(residual / norm)
        kept.append(label)
    return CodeSet(tuple(basis), tuple(kept))


def _require_orthonormal(code_set, tol):
    failure = check_orthonormal(code_set, tol)
    if failure is not None:
        raise NotOrthonormalError(*failure)


def rotate(code_set, rotation, tol=None):
    """
    The basis e'_i = Σ_j U_ij e_j.

    Raises:
        NotUnitaryError: If `rotation` is not a unitary of matching size
    """
    tol = resolve_tolerance(tol)
    code_set = CodeSet.coerce(code_set)
    matrix = np.asarray(rotation, dtype=np.complex128)
    n = len(code_set)
    if matrix.shape != (n, n):
        raise NotUnitaryError(f"rotation has shape {matrix.shape}, expected ({n}, {n})")
    deviation = np.abs(matrix @ matrix.conj().T - np.eye(n)).max() if n else 0.0
    if deviation > tol:
        raise NotUnitaryError(f"rotation deviates from unitarity by {deviation:.3g}")
    rotated = []
    for i in range(n):
        v = QVector()
        for j, e in enumerate(code_set):
            v = v + complex(matrix[i, j]) * e
        rotated.append(v)
    return CodeSet(tuple(rotated), code_set.labels)


def basis_rotation_preserves(code_set, rotation, condition=1, tol=None):
    """
    Rotate an orthonormal basis within its span and re-check prefix-freeness.

    Every orthonormal basis of a prefix-free space is prefix-free, so the
    verdict on the rotated basis matches the verdict on the original.

    Args:
        code_set (CodeSet): Orthonormal basis
        rotation: Unitary matrix over the span coefficients
        condition (int): Condition to re-check (1-4)
        tol (float): Comparison tolerance

    Returns:
        PrefixFreeVerdict: Verdict on the rotated basis

    Raises:
        NotOrthonormalError: If `code_set` is not orthonormal
        NotUnitaryError: If `rotation` is not unitary
    """
    tol = resolve_tolerance(tol)
    code_set = CodeSet.coerce(code_set)
    _require_orthonormal(code_set, tol)
    return check_prefix_free(rotate(code_set, rotation, tol), condition, tol=tol)


def subspace_length_weight(spanning, rank_tol=RANK_TOLERANCE):
    """
    Tr(2^{-Λ}P(span)) for any spanning list: orthonormalize, then sum
    ⟨e_i|2^{-Λ}|e_i⟩ (the trace is basis-independent).
    """
    basis = orthonormalize(spanning, rank_tol=rank_tol)
    return float(sum(length_weight(e) for e in basis))
