#!/usr/bin/env python3
"""
Brute-force dense tape oracle.

Materializes a qubit string as a 3^N x 3^N matrix over explicit tape
configurations, contracts the cells outside the index set with
numpy.einsum, keeps the bit-string configurations and converts back to a
sparse operator. Used to cross-check the sparse restriction.
"""

import itertools
import logging
import string

import numpy as np

from qprefix.config import ORACLE_MAX_CELLS
from qprefix.core.states import QOperator, QVector, density_from_vector
from qprefix.core.strings import BitString
from qprefix.errors import CapacityError, OracleGuardError
from qprefix.tape.embedding import BLANK, SYMBOLS, embed, is_bit_string_configuration
from qprefix.tape.index_sets import IndexSet
from qprefix.tape.operations import restrict, restriction_cells, tensor_at

logger = logging.getLogger(__name__)

_SYMBOL_INDEX = {symbol: i for i, symbol in enumerate(SYMBOLS)}
_LETTERS = string.ascii_letters


def _configuration_index(config):
    index = 0
    for symbol in config:
        index = index * len(SYMBOLS) + _SYMBOL_INDEX[symbol]
    return index


def _configurations(cell_count):
    """All configurations in the row order of the dense matrices."""
    return ["".join(c) for c in itertools.product(SYMBOLS, repeat=cell_count)]


def check_oracle_guard(cell_count):
    if cell_count > ORACLE_MAX_CELLS:
        raise OracleGuardError(
            f"dense oracle limited to {ORACLE_MAX_CELLS} cells (3^{ORACLE_MAX_CELLS} configurations), "
            f"got {cell_count}"
        )


def dense_tape_matrix(rho, cell_count):
    """
    ι_ℕ U_ℕ ρ U_ℕ* ι_ℕ* as a dense matrix over {0,1,#}^N.

    Raises:
        OracleGuardError: If `cell_count` exceeds ORACLE_MAX_CELLS
        CapacityError: If some string is longer than `cell_count`
    """
    check_oracle_guard(cell_count)
    tape = embed(rho, IndexSet.naturals(), cell_count)
    dim = len(SYMBOLS) ** cell_count
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    for (ket, bra), coefficient in tape.terms.items():
        matrix[_configuration_index(ket), _configuration_index(bra)] += coefficient
    return matrix


def partial_trace(matrix, cell_count, kept):
    """
    Trace out every cell not in `kept` (1-based, increasing).

    Ket axis i and bra axis i share a subscript exactly when cell i+1 is traced.
    """
    tensor = matrix.reshape((len(SYMBOLS),) * (2 * cell_count))
    kept_set = set(kept)
    ket_letters = list(_LETTERS[:cell_count])
    bra_letters = [
        ket_letters[i] if i + 1 not in kept_set else _LETTERS[cell_count + i]
        for i in range(cell_count)
    ]
    output = "".join(ket_letters[i - 1] for i in kept) + "".join(bra_letters[i - 1] for i in kept)
    subscripts = f"{''.join(ket_letters)}{''.join(bra_letters)}->{output}"
    reduced = np.einsum(subscripts, tensor)
    side = len(SYMBOLS) ** len(kept)
    return reduced.reshape(side, side)


def bit_string_mask(cell_count):
    """Boolean mask over configurations, True at the bit-string configurations."""
    return np.fromiter(
        (is_bit_string_configuration(config) for config in _configurations(cell_count)),
        dtype=bool,
        count=len(SYMBOLS) ** cell_count,
    )


def oracle_restrict(rho, index_set, cell_count):
    """
    Restriction computed by literal dense contraction.

    Args:
        rho (QOperator or QVector): Qubit string
        index_set (IndexSet): Cells to keep
        cell_count (int): Truncation bound N (at most ORACLE_MAX_CELLS)

    Returns:
        QOperator: Should equal restrict(rho, index_set) entrywise

    Raises:
        OracleGuardError: If the dense space would be too large
        CapacityError: If `cell_count` is below the exact truncation bound
    """
    check_oracle_guard(cell_count)
    if isinstance(rho, QVector):
        rho = density_from_vector(rho, allow_unnormalized=True)
    required = restriction_cells(rho, index_set)
    if cell_count < required:
        raise CapacityError(f"oracle needs at least {required} cells, got {cell_count}")

    kept = index_set.cells(cell_count)
    reduced = partial_trace(dense_tape_matrix(rho, cell_count), cell_count, kept)
    mask = bit_string_mask(len(kept))
    projected = reduced[np.ix_(mask, mask)]

    strings = [
        BitString(config.rstrip(BLANK))
        for config, keep in zip(_configurations(len(kept)), mask)
        if keep
    ]

    rows, cols = np.nonzero(projected)
    result = QOperator(
        ((strings[i], strings[j]), projected[i, j])
        for i, j in zip(rows, cols)
    )
    logger.debug(f"Oracle contracted {3 ** cell_count}-dimensional tape down to {len(result)} entries")
    return result


def operator_deviation(a, b):
    """Largest entrywise difference between two operators."""
    keys = set(a.entries) | set(b.entries)
    return max((abs(a.entries.get(k, 0j) - b.entries.get(k, 0j)) for k in keys), default=0.0)


def restriction_trial(rho, index_set, cell_count):
    """
    Compare the sparse restriction with the dense oracle.

    Returns:
        float: Maximum entrywise deviation
    """
    sparse = restrict(rho, index_set, cell_count)
    dense = oracle_restrict(rho, index_set, cell_count)
    return operator_deviation(sparse, dense)


def duality_trial(rho, operator, index_set):
    """
    Compare Tr(ρ_I A) with Tr(ρ (A ⊗_I 1)).

    The identity only needs to cover the complement cells a string of ρ
    can reach, so it is cut off at that many qubits. The truncated identity
    loses weight in the product, so that loss is not logged.

    Args:
        rho (QOperator): Density operator
        operator (QOperator): Observable A with base length <= |I|
        index_set (IndexSet): Cells of A

    Returns:
        float: |Tr(ρ_I A) − Tr(ρ (A ⊗_I 1))|
    """
    cells = max(rho.max_length, index_set.boundary)
    identity = QOperator.identity(len(index_set.complement().cells(cells)))
    restricted_side = (restrict(rho, index_set) @ operator).trace
    lifted_side = (rho @ tensor_at(operator, index_set, identity, warn_on_loss=False)).trace
    return abs(restricted_side - lifted_side)
