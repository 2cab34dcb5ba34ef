#!/usr/bin/env python3
"""
Classical bit strings.

A BitString is a finite sequence over {0,1}, including the empty string
(written λ, or `e` in text form). BitStrings order by length first and then
lexicographically, which is the order used for every deterministic
enumeration and rendering in the package.
"""

import logging
from dataclasses import dataclass
from functools import total_ordering
from itertools import product

from qprefix.errors import BitStringParseError

logger = logging.getLogger(__name__)

# Accepted spellings of the empty string
EMPTY_TOKENS = ("", "e", "λ")


@total_ordering
@dataclass(frozen=True)
class BitString:
    """A finite classical binary string."""

    bits: str = ""

    def __post_init__(self):
        for position, char in enumerate(self.bits, start=1):
            if char not in "01":
                raise BitStringParseError(self.bits, position)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __add__(self, other):
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString(self.bits + other.bits)

    def __lt__(self, other):
        if not isinstance(other, BitString):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.bits if self.bits else "e"

    def sort_key(self):
        """Key ordering strings by (length, lexicographic)."""
        return (len(self.bits), self.bits)

    @property
    def is_empty(self):
        return not self.bits

    def concat(self, other):
        """Classical concatenation s∘t."""
        return self + other

    def is_prefix_of(self, other):
        return other.bits.startswith(self.bits)

    def prefixes(self):
        """All prefixes of this string, shortest (λ) first, including itself."""
        return [BitString(self.bits[:n]) for n in range(len(self.bits) + 1)]


EMPTY = BitString("")


def parse_bitstring(text):
    """
    Parse the text form of a bit string.

    Args:
        text (str): '0'/'1' characters, or one of the empty-string tokens ("", "e", "λ")

    Returns:
        BitString: The parsed string

    Raises:
        BitStringParseError: On any other character, naming its 1-based position
    """
    if text in EMPTY_TOKENS:
        return EMPTY
    return BitString(text)


def enumerate_bitstrings(max_length, min_length=0):
    """
    Enumerate classical strings in (length, lexicographic) order.

    Args:
        max_length (int): Longest length to include
        min_length (int): Shortest length to include (default: 0, i.e. λ first)

    Yields:
        BitString: Each string with min_length <= length <= max_length
    """
    for length in range(max(min_length, 0), max_length + 1):
        for bits in product("01", repeat=length):
            yield BitString("".join(bits))
