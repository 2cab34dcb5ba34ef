#!/usr/bin/env python3
"""
Lengths of qubit strings.

Base length ℓ (longest supported string), average length ℓ̄ = Tr(ρΛ),
the length weight ⟨φ|2^{−Λ}|φ⟩ and the length-eigenstate test. Every
function accepts either a QVector or a QOperator where that makes sense.
"""

import logging

from qprefix.config import resolve_tolerance
from qprefix.core.states import QOperator, QVector
from qprefix.core.strings import enumerate_bitstrings
from qprefix.errors import EmptySupportError, NotDensityError

logger = logging.getLogger(__name__)


def _supported_weights(x, tol):
    """Mapping string -> weight (|α_s|² or |⟨s|ρ|s⟩|) above `tol`."""
    if isinstance(x, QVector):
        return {s: abs(a) ** 2 for s, a in x.terms.items() if abs(a) > tol}
    if isinstance(x, QOperator):
        return {s: abs(c) for s, c in x.diagonal().items() if abs(c) > tol}
    raise TypeError(f"expected QVector or QOperator, got {type(x).__name__}")


def supported_lengths(x, tol=None):
    """
    The set of lengths carrying weight in `x`.

    Raises:
        EmptySupportError: If nothing is supported
    """
    weights = _supported_weights(x, resolve_tolerance(tol))
    if not weights:
        raise EmptySupportError("the zero vector has no length")
    return {len(s) for s in weights}


def base_length(x, tol=None):
    """
    ℓ(x): the longest supported string.

    Args:
        x (QVector or QOperator): Qubit string
        tol (float): Support threshold

    Returns:
        int: Maximum length over strings with weight above `tol`

    Raises:
        EmptySupportError: On the zero vector or operator
    """
    return max(supported_lengths(x, tol))


def is_length_eigenstate(x, tol=None):
    """True iff all supported strings share one length."""
    return len(supported_lengths(x, tol)) == 1


def average_length(x, tol=None):
    """
    ℓ̄(ρ) = Tr(ρΛ) = Σ_s ℓ(s)·⟨s|ρ|s⟩.

    Args:
        x (QOperator or QVector): Density operator, or a normalized state vector
        tol (float): Trace tolerance

    Returns:
        float: Average length

    Raises:
        NotDensityError: If the trace deviates from 1 beyond `tol`
    """
    tol = resolve_tolerance(tol)
    if isinstance(x, QVector):
        weights = {s: abs(a) ** 2 for s, a in x.terms.items()}
    else:
        weights = {s: c.real for s, c in x.diagonal().items()}
    trace = sum(weights.values())
    if abs(trace - 1) > tol:
        raise NotDensityError(f"average length needs unit trace, got {trace:.10g}")
    return float(sum(len(s) * w for s, w in weights.items()))


def length_weight(v):
    """
    ⟨φ|2^{−Λ}|φ⟩ = Σ_s |α_s|²·2^{−ℓ(s)}.

    Args:
        v (QVector): Any vector (normalization not required)

    Returns:
        float: The weighted squared norm
    """
    return float(sum(abs(a) ** 2 * 2.0 ** -len(s) for s, a in v.terms.items()))


def length_observable(max_length):
    """Λ restricted to the span of strings of length <= max_length."""
    return QOperator(((s, s), len(s)) for s in enumerate_bitstrings(max_length) if len(s))
