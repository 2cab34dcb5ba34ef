"""
qprefix - A toolkit for indeterminate-length quantum bit strings

This package provides sparse qubit-string vectors and operators, their
embedding on a Turing-machine tape (prefixes, restrictions, tensor products
and concatenation), prefix-free verification with the quantum Kraft
inequality, and a small expression language to drive all of it.
"""

__version__ = "0.1.0"
__author__ = "qprefix Team"
__all__ = ["core", "tape", "analysis", "dsl", "utils", "commands", "codebook"]
