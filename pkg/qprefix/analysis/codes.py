#!/usr/bin/env python3
"""
Finite ordered sets of qubit strings.
"""

import logging
from dataclasses import dataclass

import numpy as np

from qprefix.config import resolve_tolerance
from qprefix.core.lengths import base_length
from qprefix.core.states import QVector, inner_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CodeSet:
    """
    An ordered list of nonzero vectors with a label per vector.

    Labels default to e_1, e_2, ... in input order.
    """

    vectors: tuple
    labels: tuple = ()

    def __post_init__(self):
        vectors = tuple(self.vectors)
        for position, v in enumerate(vectors, start=1):
            if not isinstance(v, QVector):
                raise TypeError(f"code set member {position} is a {type(v).__name__}, not a QVector")
            if v.is_zero:
                raise ValueError(f"code set member {position} is the zero vector")
        labels = tuple(self.labels) if self.labels else tuple(f"e_{i}" for i in range(1, len(vectors) + 1))
        if len(labels) != len(vectors):
            raise ValueError(f"{len(labels)} labels given for {len(vectors)} vectors")
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def coerce(cls, members):
        """Accept a CodeSet or any iterable of QVectors."""
        if isinstance(members, CodeSet):
            return members
        return cls(tuple(members))

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, index):
        return self.vectors[index]

    def max_base_length(self, tol=None):
        return max((base_length(v, tol) for v in self.vectors), default=0)

    def gram_matrix(self):
        """G_ij = ⟨e_i|e_j⟩."""
        n = len(self.vectors)
        gram = np.zeros((n, n), dtype=np.complex128)
        for i, v in enumerate(self.vectors):
            for j, w in enumerate(self.vectors):
                gram[i, j] = inner_product(v, w)
        return gram


def check_orthonormal(code_set, tol=None):
    """
    Find the first pair violating ⟨e_i|e_j⟩ = δ_ij.

    Args:
        code_set (CodeSet): Vectors to check
        tol (float): Comparison tolerance

    Returns:
        tuple or None: (label_i, label_j, inner product) of the first offending
        pair in row-major order over i <= j, or None if orthonormal
    """
    tol = resolve_tolerance(tol)
    code_set = CodeSet.coerce(code_set)
    gram = code_set.gram_matrix()
    for i in range(len(code_set)):
        for j in range(i, len(code_set)):
            expected = 1.0 if i == j else 0.0
            if abs(gram[i, j] - expected) > tol:
                logger.debug(f"Orthonormality fails at ({code_set.labels[i]}, {code_set.labels[j]})")
                return code_set.labels[i], code_set.labels[j], complex(gram[i, j])
    return None


def is_orthonormal(code_set, tol=None):
    return check_orthonormal(code_set, tol) is None
