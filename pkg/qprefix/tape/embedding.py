#!/usr/bin/env python3
"""
Tape embedding of qubit strings.

A tape configuration is a string over {0,1,#} of length `cell_count`
(cell i is character i-1). Cells beyond the truncation bound are blank.
`embed` writes the bits of each string into the cells of an index set,
followed by blanks (U_I composed with the inclusion ι_I). `extract`
reads them back: the adjoint ι_I* projects onto bit-string
configurations, so configurations that are not of that form are dropped.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from qprefix.config import PRUNE_TOLERANCE
from qprefix.core.states import QOperator, QVector
from qprefix.core.strings import BitString
from qprefix.errors import CapacityError

logger = logging.getLogger(__name__)

BLANK = "#"
SYMBOLS = ("0", "1", BLANK)


def is_bit_string_configuration(symbols):
    """True iff no bit follows a blank (e.g. '11##' yes, '1#0#' no)."""
    return f"{BLANK}0" not in symbols and f"{BLANK}1" not in symbols


@dataclass(frozen=True)
class TapeState:
    """
    Sparse vector or operator over truncated tape configurations.

    Attributes:
        cell_count: Truncation bound N
        terms: config -> amplitude (vector form) or (config, config) -> coefficient
        is_operator: Which of the two forms `terms` holds
    """

    cell_count: int
    terms: Mapping = field(default_factory=dict)
    is_operator: bool = False

    def __post_init__(self):
        for key in self.terms:
            for config in (key if self.is_operator else (key,)):
                if len(config) != self.cell_count or any(c not in SYMBOLS for c in config):
                    raise ValueError(
                        f"configuration {config!r} is not over {{0,1,#}}^{self.cell_count}"
                    )
        pruned = {k: complex(v) for k, v in self.terms.items() if abs(v) >= PRUNE_TOLERANCE}
        object.__setattr__(self, "terms", MappingProxyType(pruned))

    def configurations(self):
        """Every configuration that appears in the state."""
        if not self.is_operator:
            return set(self.terms)
        return {config for pair in self.terms for config in pair}

    def is_bit_string_form(self, cells=None):
        """
        Whether every configuration, read on `cells` (default: all cells), is a
        bit-string configuration.
        """
        cells = range(1, self.cell_count + 1) if cells is None else cells
        return all(
            is_bit_string_configuration(read_cells(config, cells))
            for config in self.configurations()
        )

    def join(self, other, cells):
        """
        Tape tensor product of two states on complementary cells.

        Args:
            other (TapeState): State occupying every cell not in `cells`
            cells: Cells taken from this state

        Returns:
            TapeState: Product state on the same cell count
        """
        if other.cell_count != self.cell_count or other.is_operator != self.is_operator:
            raise ValueError("can only join tape states of the same shape")
        mine = set(cells)

        def merge(a, b):
            return "".join(a[i] if i + 1 in mine else b[i] for i in range(self.cell_count))

        terms = {}
        for key_a, c_a in self.terms.items():
            for key_b, c_b in other.terms.items():
                if self.is_operator:
                    key = (merge(key_a[0], key_b[0]), merge(key_a[1], key_b[1]))
                else:
                    key = merge(key_a, key_b)
                terms[key] = terms.get(key, 0j) + c_a * c_b
        return TapeState(self.cell_count, terms, self.is_operator)


def read_cells(config, cells):
    """The symbols of `config` at `cells`, in order."""
    return "".join(config[i - 1] for i in cells)


def _placement(cells, cell_count):
    def place(string):
        if len(string) > len(cells):
            raise CapacityError(
                f"string of length {len(string)} does not fit into {len(cells)} cells"
            )
        tape = [BLANK] * cell_count
        for cell, bit in zip(cells, string.bits):
            tape[cell - 1] = bit
        return "".join(tape)
    return place


def embed(x, index_set, cell_count):
    """
    Write a qubit string onto the cells of `index_set`.

    Args:
        x (QVector or QOperator): Qubit string
        index_set (IndexSet): Cells to fill, in increasing order
        cell_count (int): Truncation bound N

    Returns:
        TapeState: Bits at the first ℓ(s) cells of the set, blanks elsewhere

    Raises:
        CapacityError: If some string is longer than the available cells
    """
    place = _placement(index_set.cells(cell_count), cell_count)
    if isinstance(x, QVector):
        terms = {place(s): a for s, a in x.terms.items()}
        return TapeState(cell_count, terms, False)
    terms = {(place(ket), place(bra)): c for (ket, bra), c in x.entries.items()}
    return TapeState(cell_count, terms, True)


def _reader(index_set, cell_count):
    cells = index_set.cells(cell_count)
    outside = [i for i in range(1, cell_count + 1) if i not in set(cells)]

    def read(config):
        if any(config[i - 1] != BLANK for i in outside):
            return None
        symbols = read_cells(config, cells)
        if not is_bit_string_configuration(symbols):
            return None
        return BitString(symbols.rstrip(BLANK))
    return read


def extract(state, index_set):
    """
    Read a qubit string back from the cells of `index_set`.

    Terms that are not bit-string configurations on the set, or that carry
    symbols outside it, lie outside the image of the embedding and are dropped.
    The result may be unnormalized or zero.

    Args:
        state (TapeState): Tape vector or operator
        index_set (IndexSet): Cells to read

    Returns:
        QVector or QOperator: Matching the form of `state`
    """
    read = _reader(index_set, state.cell_count)
    dropped = 0
    if not state.is_operator:
        pairs = []
        for config, amplitude in state.terms.items():
            string = read(config)
            if string is None:
                dropped += 1
                continue
            pairs.append((string, amplitude))
        result = QVector(pairs)
    else:
        pairs = []
        for (ket, bra), coefficient in state.terms.items():
            ket_string, bra_string = read(ket), read(bra)
            if ket_string is None or bra_string is None:
                dropped += 1
                continue
            pairs.append(((ket_string, bra_string), coefficient))
        result = QOperator(pairs)
    if dropped:
        logger.debug(f"Projection dropped {dropped} non-bit-string terms on {index_set}")
    return result
