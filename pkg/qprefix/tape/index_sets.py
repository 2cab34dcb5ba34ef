#!/usr/bin/env python3
"""
Sets of tape cells.

Cells are indexed by the positive integers. An IndexSet is either finite
(the members are stored) or cofinite (ℕ minus a finite set; the excluded
cells are stored). Cells of a set are always filled in increasing order.
Stored indices are bounded by MAX_CELL_INDEX.
"""

from dataclasses import dataclass

from qprefix.config import MAX_CELL_INDEX
from qprefix.errors import IndexSetError


def _check_bound(index, text):
    if index > MAX_CELL_INDEX:
        raise IndexSetError(f"index set {text} exceeds the cell limit {MAX_CELL_INDEX}")


def _validated(indices):
    members = sorted(set(int(i) for i in indices))
    if members and members[0] < 1:
        raise IndexSetError(f"cell indices must be positive, got {members[0]}")
    if members:
        _check_bound(members[-1], f"containing cell {members[-1]}")
    return tuple(members)


@dataclass(frozen=True)
class IndexSet:
    """A finite or cofinite set of positive cell indices."""

    members: tuple = ()
    cofinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "members", _validated(self.members))

    @classmethod
    def finite(cls, indices):
        return cls(tuple(indices), False)

    @classmethod
    def interval(cls, start, stop):
        """[start, stop]; stop = start - 1 gives the empty set."""
        if start < 1 or stop < start - 1:
            raise IndexSetError(f"malformed index range [{start},{stop}]")
        _check_bound(stop, f"[{start},{stop}]")
        return cls(tuple(range(start, stop + 1)), False)

    @classmethod
    def tail(cls, start):
        """[start, ∞)."""
        if start < 1:
            raise IndexSetError(f"malformed index range [{start},inf)")
        _check_bound(start - 1, f"[{start},inf)")
        return cls(tuple(range(1, start)), True)

    @classmethod
    def naturals(cls):
        return cls((), True)

    @property
    def is_finite(self):
        return not self.cofinite

    @property
    def size(self):
        """Number of cells, or None for a cofinite set."""
        return None if self.cofinite else len(self.members)

    @property
    def boundary(self):
        """Largest index at which membership changes (0 if none)."""
        return self.members[-1] if self.members else 0

    def complement(self):
        return IndexSet(self.members, not self.cofinite)

    def __contains__(self, index):
        return (index in self.members) != self.cofinite

    def cells(self, cell_count):
        """Members within [1, cell_count], increasing."""
        if self.cofinite:
            excluded = set(self.members)
            return tuple(i for i in range(1, cell_count + 1) if i not in excluded)
        return tuple(i for i in self.members if i <= cell_count)

    def as_interval(self):
        """
        (start, stop) when the set is an interval [start, stop], (start, None)
        for a tail [start, ∞), otherwise None. The empty set is not an interval.
        """
        if self.cofinite:
            if self.members == tuple(range(1, len(self.members) + 1)):
                return (len(self.members) + 1, None)
            return None
        if self.members and self.members == tuple(range(self.members[0], self.members[-1] + 1)):
            return (self.members[0], self.members[-1])
        return None

    def __str__(self):
        bounds = self.as_interval()
        if bounds is not None:
            start, stop = bounds
            return f"[{start},inf)" if stop is None else f"[{start},{stop}]"
        body = ",".join(str(i) for i in self.members)
        return f"N\\{{{body}}}" if self.cofinite else f"{{{body}}}"
