#!/usr/bin/env python3
"""
Sparse vectors and operators on the string space.

QVector maps classical strings to complex amplitudes; QOperator maps
(ket, bra) string pairs to complex coefficients. Both are immutable,
store no amplitude below PRUNE_TOLERANCE, and need not be normalized:
unnormalized results of tensor products and concatenations are
first-class values.
"""

import logging
from collections.abc import Mapping
from types import MappingProxyType

import numpy as np

from qprefix.config import PRUNE_TOLERANCE, resolve_tolerance
from qprefix.core.strings import BitString, EMPTY, enumerate_bitstrings, parse_bitstring
from qprefix.errors import NormalizationError, NotDensityError

logger = logging.getLogger(__name__)


def _as_bitstring(key):
    if isinstance(key, BitString):
        return key
    return parse_bitstring(key)


def _pairs(terms):
    if terms is None:
        return ()
    if isinstance(terms, Mapping):
        return terms.items()
    return terms


def _pruned(accumulated):
    return MappingProxyType(
        {key: value for key, value in accumulated.items() if abs(value) >= PRUNE_TOLERANCE}
    )


def _is_scalar(value):
    return isinstance(value, (int, float, complex, np.number)) and not isinstance(value, bool)


class QVector:
    """A finite-support element of the string space."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        """
        Args:
            terms: Mapping or iterable of (string, amplitude) pairs; strings may be
                BitStrings or their text form. Repeated strings accumulate.
        """
        accumulated = {}
        for key, amplitude in _pairs(terms):
            string = _as_bitstring(key)
            accumulated[string] = accumulated.get(string, 0j) + complex(amplitude)
        self._terms = _pruned(accumulated)

    @classmethod
    def basis(cls, string):
        """The classical basis vector |s⟩."""
        return cls({_as_bitstring(string): 1.0})

    @classmethod
    def zero(cls):
        return cls()

    @property
    def terms(self):
        return self._terms

    def amplitude(self, string):
        return self._terms.get(_as_bitstring(string), 0j)

    def support(self):
        """Supported strings in (length, lexicographic) order."""
        return sorted(self._terms)

    def items(self):
        return [(string, self._terms[string]) for string in self.support()]

    def __len__(self):
        return len(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def squared_norm(self):
        return float(sum(abs(a) ** 2 for a in self._terms.values()))

    @property
    def norm(self):
        return self.squared_norm ** 0.5

    @property
    def max_length(self):
        """Longest stored string (0 for the zero vector)."""
        return max((len(s) for s in self._terms), default=0)

    def normalized(self):
        norm = self.norm
        if norm == 0:
            raise NormalizationError("cannot normalize the zero vector")
        return self / norm

    def conjugate(self):
        return QVector({s: a.conjugate() for s, a in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        return QVector(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QVector({s: -a for s, a in self._terms.items()})

    def __mul__(self, scalar):
        if not _is_scalar(scalar):
            return NotImplemented
        scalar = complex(scalar)
        return QVector({s: scalar * a for s, a in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not _is_scalar(scalar):
            return NotImplemented
        return self * (1 / complex(scalar))

    def isclose(self, other, tol=None):
        """Entrywise comparison within `tol`."""
        tol = resolve_tolerance(tol)
        keys = set(self._terms) | set(other._terms)
        return all(abs(self.amplitude(k) - other.amplitude(k)) <= tol for k in keys)

    def __repr__(self):
        body = ", ".join(f"'{s}': {a!r}" for s, a in self.items())
        return f"QVector({{{body}}})"


class QOperator:
    """A finite-support operator on the string space."""

    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        """
        Args:
            entries: Mapping or iterable of ((ket, bra), coefficient) pairs.
        """
        accumulated = {}
        for (ket, bra), coefficient in _pairs(entries):
            key = (_as_bitstring(ket), _as_bitstring(bra))
            accumulated[key] = accumulated.get(key, 0j) + complex(coefficient)
        self._entries = _pruned(accumulated)

    @classmethod
    def outer(cls, ket, bra=None):
        """|ket⟩⟨bra| (bra defaults to ket)."""
        bra = ket if bra is None else bra
        return cls(
            ((s, t), a * b.conjugate())
            for s, a in ket.terms.items()
            for t, b in bra.terms.items()
        )

    @classmethod
    def identity(cls, max_length):
        """The identity on the span of all strings of length <= max_length."""
        return cls(((s, s), 1.0) for s in enumerate_bitstrings(max_length))

    @classmethod
    def from_matrix(cls, matrix, strings):
        """Build an operator from a dense matrix indexed by `strings`."""
        matrix = np.asarray(matrix)
        return cls(
            ((strings[i], strings[j]), matrix[i, j])
            for i in range(len(strings))
            for j in range(len(strings))
            if matrix[i, j] != 0
        )

    @classmethod
    def zero(cls):
        return cls()

    @property
    def entries(self):
        return self._entries

    def entry(self, ket, bra):
        return self._entries.get((_as_bitstring(ket), _as_bitstring(bra)), 0j)

    def items(self):
        keys = sorted(self._entries, key=lambda k: (k[0].sort_key(), k[1].sort_key()))
        return [(key, self._entries[key]) for key in keys]

    def strings(self):
        """Every string appearing as a ket or bra, in (length, lexicographic) order."""
        found = set()
        for ket, bra in self._entries:
            found.add(ket)
            found.add(bra)
        return sorted(found)

    def diagonal(self):
        """Mapping string -> ⟨s|A|s⟩ over the stored diagonal."""
        return {ket: c for (ket, bra), c in self._entries.items() if ket == bra}

    def __len__(self):
        return len(self._entries)

    @property
    def is_zero(self):
        return not self._entries

    @property
    def max_length(self):
        return max((len(s) for s in self.strings()), default=0)

    @property
    def trace(self):
        return complex(sum(self.diagonal().values(), 0j))

    def dagger(self):
        return QOperator(((bra, ket), c.conjugate()) for (ket, bra), c in self._entries.items())

    def expectation(self, vector):
        """⟨v|A|v⟩."""
        return inner_product(vector, self @ vector)

    def __matmul__(self, other):
        if isinstance(other, QVector):
            return QVector(
                (ket, c * other.amplitude(bra)) for (ket, bra), c in self._entries.items()
            )
        if isinstance(other, QOperator):
            by_ket = {}
            for (ket, bra), c in other._entries.items():
                by_ket.setdefault(ket, []).append((bra, c))
            return QOperator(
                ((ket, bra2), c1 * c2)
                for (ket, bra), c1 in self._entries.items()
                for bra2, c2 in by_ket.get(bra, ())
            )
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        return QOperator(list(self._entries.items()) + list(other._entries.items()))

    def __sub__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QOperator({k: -c for k, c in self._entries.items()})

    def __mul__(self, scalar):
        if not _is_scalar(scalar):
            return NotImplemented
        scalar = complex(scalar)
        return QOperator({k: scalar * c for k, c in self._entries.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not _is_scalar(scalar):
            return NotImplemented
        return self * (1 / complex(scalar))

    def to_matrix(self, strings=None):
        """
        Dense matrix of the operator on the block spanned by `strings`.

        Args:
            strings: Row/column order (default: self.strings())

        Returns:
            numpy.ndarray: Complex square matrix
        """
        strings = self.strings() if strings is None else list(strings)
        index = {s: i for i, s in enumerate(strings)}
        matrix = np.zeros((len(strings), len(strings)), dtype=np.complex128)
        for (ket, bra), c in self._entries.items():
            if ket in index and bra in index:
                matrix[index[ket], index[bra]] = c
        return matrix

    def is_hermitian(self, tol=None):
        tol = resolve_tolerance(tol)
        keys = set(self._entries) | {(bra, ket) for ket, bra in self._entries}
        return all(
            abs(self.entry(ket, bra) - self.entry(bra, ket).conjugate()) <= tol
            for ket, bra in keys
        )

    def check_density(self, tol=None):
        """
        Verify hermiticity, unit trace and positivity on the support block.

        Raises:
            NotDensityError: Naming the first failed condition
        """
        tol = resolve_tolerance(tol)
        if not self.is_hermitian(tol):
            raise NotDensityError("operator is not Hermitian")
        trace = self.trace
        if abs(trace - 1) > tol:
            raise NotDensityError(f"trace is {trace.real:.10g}, expected 1")
        if self._entries:
            matrix = self.to_matrix()
            eigenvalues = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)
            if eigenvalues.min() < -tol:
                raise NotDensityError(f"negative eigenvalue {eigenvalues.min():.3g}")

    def is_density(self, tol=None):
        try:
            self.check_density(tol)
        except NotDensityError:
            return False
        return True

    def isclose(self, other, tol=None):
        tol = resolve_tolerance(tol)
        keys = set(self._entries) | set(other._entries)
        return all(abs(self._entries.get(k, 0j) - other._entries.get(k, 0j)) <= tol for k in keys)

    def __repr__(self):
        body = ", ".join(f"('{k}', '{b}'): {c!r}" for (k, b), c in self.items())
        return f"QOperator({{{body}}})"


def inner_product(v, w):
    """
    ⟨v|w⟩ with classical strings orthonormal; conjugate-linear in `v`.

    Args:
        v (QVector): Bra side
        w (QVector): Ket side

    Returns:
        complex: Σ_s conj(v_s)·w_s
    """
    if len(v.terms) > len(w.terms):
        return sum((v.amplitude(s).conjugate() * a for s, a in w.terms.items()), 0j)
    return sum((a.conjugate() * w.amplitude(s) for s, a in v.terms.items()), 0j)


def density_from_vector(v, allow_unnormalized=False, tol=None):
    """
    The outer product |v⟩⟨v|.

    Args:
        v (QVector): State vector
        allow_unnormalized (bool): Skip the normalization check
        tol (float): Normalization tolerance

    Returns:
        QOperator: Entries v_s·conj(v_t)

    Raises:
        NormalizationError: If |‖v‖² − 1| > tol and allow_unnormalized is False
    """
    tol = resolve_tolerance(tol)
    if not allow_unnormalized and abs(v.squared_norm - 1) > tol:
        raise NormalizationError(
            f"vector has squared norm {v.squared_norm:.10g}; it is no state vector"
        )
    return QOperator.outer(v)


LAMBDA = QVector.basis(EMPTY)
