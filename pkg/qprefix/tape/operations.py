#!/usr/bin/env python3
"""
Restriction, prefix, tensor products and concatenation of qubit strings.

Restriction works directly on sparse (ket, bra) pairs: both strings are
padded with blanks, the partial trace over cells outside the index set
keeps a pair only when the traced-out symbols agree (a blank is orthogonal
to 0 and 1), and the surviving pair is read back on the kept cells.
Tensor products go through explicit tape states (see embedding.py).
"""

import logging
from dataclasses import dataclass

from qprefix.config import resolve_tolerance
from qprefix.core.lengths import base_length, is_length_eigenstate
from qprefix.core.states import QOperator, QVector, density_from_vector
from qprefix.core.strings import BitString
from qprefix.errors import CapacityError, LengthEigenstateError
from qprefix.tape.embedding import BLANK, embed, extract, is_bit_string_configuration, read_cells
from qprefix.tape.index_sets import IndexSet

logger = logging.getLogger(__name__)


def _as_operator(x):
    if isinstance(x, QVector):
        return density_from_vector(x, allow_unnormalized=True)
    if isinstance(x, QOperator):
        return x
    raise TypeError(f"expected QVector or QOperator, got {type(x).__name__}")


def restriction_cells(rho, index_set):
    """Smallest truncation bound for which restricting `rho` to `index_set` is exact."""
    return max(rho.max_length, index_set.boundary)


def restrict(rho, index_set, cell_count=None):
    """
    The restriction ρ_I of a qubit string to the cells `index_set`.

    Args:
        rho (QOperator): Density (or Hermitian) operator; a QVector is taken as |v⟩⟨v|
        index_set (IndexSet): Cells to keep
        cell_count (int): Truncation bound (default: the minimal exact bound)

    Returns:
        QOperator: Valid density operator whenever `rho` is one

    Raises:
        CapacityError: If `cell_count` is below the minimal bound
    """
    rho = _as_operator(rho)
    required = restriction_cells(rho, index_set)
    cells = required if cell_count is None else cell_count
    if cells < required:
        raise CapacityError(f"restriction needs at least {required} cells, got {cells}")

    kept = index_set.cells(cells)
    kept_set = set(kept)
    traced = [i - 1 for i in range(1, cells + 1) if i not in kept_set]

    def pad(string):
        return string.bits + BLANK * (cells - len(string))

    pairs = []
    for (ket, bra), coefficient in rho.entries.items():
        ket_tape, bra_tape = pad(ket), pad(bra)
        if any(ket_tape[i] != bra_tape[i] for i in traced):
            continue
        ket_kept, bra_kept = read_cells(ket_tape, kept), read_cells(bra_tape, kept)
        if not (is_bit_string_configuration(ket_kept) and is_bit_string_configuration(bra_kept)):
            continue
        pairs.append(((BitString(ket_kept.rstrip(BLANK)), BitString(bra_kept.rstrip(BLANK))), coefficient))

    logger.debug(f"Restricted {len(rho)} entries to {index_set} on {cells} cells: {len(pairs)} kept")
    return QOperator(pairs)


def prefix(rho, n, cell_count=None):
    """
    The n-qubit prefix ρ^n = ρ_[1,n].

    Cells past ℓ(ρ) are blank, so any n >= ℓ(ρ) gives ρ back; n is clamped
    to ℓ(ρ) before the index set is built.
    """
    if n < 0:
        raise ValueError(f"prefix length must be non-negative, got {n}")
    rho = _as_operator(rho)
    return restrict(rho, IndexSet.interval(1, min(n, rho.max_length)), cell_count)


def tensor_cells(left_length, index_set, right_length):
    """
    Truncation bound for A ⊗_I B: the first N at which both factors fit,
    plus one cell of slack.

    Raises:
        CapacityError: If a finite side can never hold its factor
    """
    complement = index_set.complement()
    for side, length in ((index_set, left_length), (complement, right_length)):
        if side.is_finite and side.size < length:
            raise CapacityError(
                f"base length {length} exceeds the {side.size} cells of {side}"
            )
    cells = index_set.boundary
    while len(index_set.cells(cells)) < left_length or len(complement.cells(cells)) < right_length:
        cells += 1
    return cells + 1


def tensor_at(a, index_set, b, cell_count=None, tol=None, warn_on_loss=True):
    """
    The indexed tensor product A ⊗_I B.

    A is written on the cells of `index_set`, B on the complement, the tape
    product is projected onto bit-string configurations and read back. Bad
    placements lose norm or annihilate the product; that is returned as is.

    Args:
        a (QVector or QOperator): Factor placed on `index_set`
        index_set (IndexSet): Cells of the first factor
        b (QVector or QOperator): Factor placed on the complement (same kind as `a`)
        cell_count (int): Truncation bound (default: minimal bound plus slack)
        tol (float): Norm loss beyond this is logged at WARNING
        warn_on_loss (bool): Whether to log norm loss at all

    Returns:
        QVector or QOperator: Possibly unnormalized product

    Raises:
        CapacityError: If a factor does not fit its cells
    """
    if isinstance(a, QVector) != isinstance(b, QVector):
        raise TypeError("tensor factors must both be vectors or both be operators")
    required = tensor_cells(a.max_length, index_set, b.max_length)
    cells = required if cell_count is None else cell_count
    if cells < required - 1:
        raise CapacityError(f"tensor product needs at least {required - 1} cells, got {cells}")

    left = embed(a, index_set, cells)
    right = embed(b, index_set.complement(), cells)
    joined = left.join(right, index_set.cells(cells))
    if not joined.is_bit_string_form():
        logger.debug(f"Tape product on {index_set} has bits after a blank; projecting them out")
    result = extract(joined, IndexSet.naturals())
    logger.debug(f"Tensor product on {index_set} with {cells} cells: {len(result)} terms")
    report = normalization_report([a, b], result)
    if warn_on_loss and report.lost_weight > resolve_tolerance(tol):
        logger.warning(
            f"Tensor product on {index_set} lost weight {report.lost_weight:.6g} "
            f"(output norm {report.output_norm:.6g})"
        )
    return result


def tensor(rho, sigma, tol=None):
    """
    ρ ⊗ σ := ρ ⊗_[1,ℓ(ρ)] σ for a length eigenstate ρ.

    Raises:
        LengthEigenstateError: If `rho` is not a length eigenstate
    """
    tol = resolve_tolerance(tol)
    if not is_length_eigenstate(rho, tol):
        raise LengthEigenstateError(
            "left factor is not a length eigenstate; use tensor_at with an explicit index set"
        )
    n = base_length(rho, tol)
    return tensor_at(rho, IndexSet.interval(1, n), sigma, tol=tol)


def concat(v, w):
    """
    |v∘w⟩ = Σ_{t,s} α_t β_s |t∘s⟩, accumulating colliding strings.

    Args:
        v (QVector): Left qubit string
        w (QVector): Right qubit string

    Returns:
        QVector: Possibly unnormalized concatenation
    """
    return QVector(
        (t + s, alpha * beta)
        for t, alpha in v.terms.items()
        for s, beta in w.terms.items()
    )


def _weight(x):
    if isinstance(x, QVector):
        return x.squared_norm
    return x.trace.real


@dataclass(frozen=True)
class NormalizationReport:
    """
    Norm bookkeeping for a product of qubit strings.

    Norms are vector norms, or traces for operators. `lost_weight` is the
    product of the input weights minus the output weight (negative if the
    operation gained weight).
    """

    input_norms: tuple
    output_norm: float
    lost_weight: float

    def to_dict(self):
        return {
            "input_norms": list(self.input_norms),
            "output_norm": self.output_norm,
            "lost_weight": self.lost_weight,
        }


def normalization_report(inputs, output):
    """
    Compare input and output norms of a tensor product or concatenation.

    Args:
        inputs: The factors
        output: The result

    Returns:
        NormalizationReport
    """
    expected = 1.0
    norms = []
    for x in inputs:
        weight = _weight(x)
        expected *= weight
        norms.append(x.norm if isinstance(x, QVector) else weight)
    output_weight = _weight(output)
    output_norm = output.norm if isinstance(output, QVector) else output_weight
    return NormalizationReport(tuple(norms), output_norm, expected - output_weight)
