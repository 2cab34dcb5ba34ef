#!/usr/bin/env python3
"""
Seeded random generators for qubit strings, operators, index sets and codes.

All functions take a numpy Generator so that oracle runs and randomized
test suites are reproducible from a single seed.
"""

import logging

import numpy as np

from qprefix.core.states import QOperator, QVector
from qprefix.core.strings import BitString, enumerate_bitstrings
from qprefix.tape.index_sets import IndexSet

logger = logging.getLogger(__name__)


def make_rng(seed=None):
    """numpy Generator for `seed` (an int, a SeedSequence or None)."""
    return np.random.default_rng(seed)


def spawn_seeds(seed, count):
    """Independent per-trial seeds derived from one root seed."""
    return np.random.SeedSequence(seed).spawn(count)


def random_bitstring(rng, max_length, min_length=0):
    length = int(rng.integers(min_length, max_length + 1))
    return BitString("".join(str(b) for b in rng.integers(0, 2, size=length)))


def _complex_gaussian(rng, size):
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_vector(rng, max_length, terms=2, length=None):
    """
    Normalized vector over `terms` distinct strings.

    Args:
        rng: numpy Generator
        max_length (int): Longest string that may appear
        terms (int): Number of supported strings (capped by what exists)
        length (int): If given, only strings of exactly this length (a length eigenstate)

    Returns:
        QVector: Unit vector with complex Gaussian amplitudes
    """
    if length is None:
        pool = list(enumerate_bitstrings(max_length))
    else:
        pool = list(enumerate_bitstrings(length, min_length=length))
    count = min(terms, len(pool))
    chosen = rng.choice(len(pool), size=count, replace=False)
    amplitudes = _complex_gaussian(rng, count)
    amplitudes /= np.linalg.norm(amplitudes)
    return QVector((pool[i], a) for i, a in zip(chosen, amplitudes))


def random_density(rng, max_length, components=2, terms=2):
    """
    Mixture of `components` random pure states with random weights.

    Returns:
        QOperator: Density operator with base length <= max_length
    """
    weights = rng.random(components) + 0.1
    weights /= weights.sum()
    rho = QOperator()
    for weight in weights:
        v = random_vector(rng, max_length, terms)
        rho = rho + float(weight) * QOperator.outer(v)
    return rho


def random_hermitian(rng, max_length, terms=3):
    """Hermitian operator supported on `terms` random strings of length <= max_length."""
    pool = list(enumerate_bitstrings(max_length))
    count = min(terms, len(pool))
    chosen = [pool[i] for i in rng.choice(len(pool), size=count, replace=False)]
    matrix = _complex_gaussian(rng, (count, count))
    return QOperator.from_matrix((matrix + matrix.conj().T) / 2, chosen)


def random_index_set(rng, max_cell=5, allow_empty=True):
    """Random finite subset of [1, max_cell]."""
    while True:
        mask = rng.random(max_cell) < 0.5
        members = [i + 1 for i in range(max_cell) if mask[i]]
        if members or allow_empty:
            return IndexSet.finite(members)


def random_classical_code(rng, max_length, split_probability=0.6):
    """
    Random complete classical prefix code: leaves of a random binary tree.

    Args:
        rng: numpy Generator
        max_length (int): Maximum codeword length (at least 1)
        split_probability (float): Chance of splitting a leaf further

    Returns:
        list[BitString]: Codewords in (length, lexicographic) order
    """
    leaves = []
    pending = [BitString("0"), BitString("1")]
    while pending:
        node = pending.pop()
        if len(node) < max_length and rng.random() < split_probability:
            pending.extend([node + BitString("0"), node + BitString("1")])
        else:
            leaves.append(node)
    return sorted(leaves)


def random_unitary(rng, dim):
    """Haar-random unitary via QR of a complex Gaussian matrix with phase fix."""
    q, r = np.linalg.qr(_complex_gaussian(rng, (dim, dim)))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
