#!/usr/bin/env python3
"""
The quantum Kraft inequality and the weight function behind it.

For a prefix-free orthonormal system {e_i}:

    Σ 2^{-ℓ(e_i)} ≤ Σ 2^{-ℓ̄(e_i)} ≤ Tr(2^{-Λ}P) ≤ 1

The first two inequalities hold for any orthonormal system, with equality
exactly when every e_i is a length eigenstate. Only the final bound needs
prefix-freeness. Tr(2^{-Λ}P) is computed as Σ_i ⟨e_i|2^{-Λ}|e_i⟩.
"""

import logging
from dataclasses import dataclass

from qprefix.config import resolve_tolerance
from qprefix.core.lengths import average_length, base_length, is_length_eigenstate, length_weight
from qprefix.core.states import QVector
from qprefix.core.strings import enumerate_bitstrings
from qprefix.errors import NotOrthonormalError
from qprefix.analysis.codes import CodeSet, check_orthonormal
from qprefix.analysis.prefix_free import check_prefix_free
from qprefix.tape.operations import concat

logger = logging.getLogger(__name__)


def weight(phi, s):
    """
    w_φ(s) = Σ_{p prefix of s} |α_p|²: the mass φ puts on prefixes of s.

    Args:
        phi (QVector): Any vector
        s (BitString): Classical string

    Returns:
        float: The weight
    """
    return float(sum(abs(phi.amplitude(p)) ** 2 for p in s.prefixes()))


def weight_by_enumeration(phi, s):
    """
    w_φ(s) = Σ_t |⟨φ∘t|s⟩|², summing over every suffix t with ℓ(t) <= ℓ(s)
    (longer suffixes cannot reach s).
    """
    total = 0.0
    for t in enumerate_bitstrings(len(s)):
        total += abs(concat(phi, QVector.basis(t)).amplitude(s)) ** 2
    return total


def full_weight(code_set, n):
    """
    W = Σ_{u∈{0,1}^n} Σ_i w_{e_i}(u).

    Once n reaches every base length, W = 2^n·Tr(2^{-Λ}P). For a prefix-free
    orthonormal system Σ_i w_{e_i}(u) <= 1 for each u, so W <= 2^n.
    """
    code_set = CodeSet.coerce(code_set)
    return float(sum(
        weight(e, u)
        for u in enumerate_bitstrings(n, min_length=n)
        for e in code_set
    ))


@dataclass(frozen=True)
class KraftContribution:
    """Per-vector terms of the Kraft chain."""

    label: str
    base_length: int
    average_length: float
    base_term: float
    average_term: float
    weight_term: float
    is_length_eigenstate: bool

    def to_dict(self):
        return {
            "label": self.label,
            "base_length": self.base_length,
            "average_length": self.average_length,
            "base_term": self.base_term,
            "average_term": self.average_term,
            "weight_term": self.weight_term,
            "length_eigenstate": self.is_length_eigenstate,
        }


@dataclass(frozen=True)
class KraftReport:
    """
    The three Kraft quantities and their verdicts.

    Attributes:
        sum_base: Σ 2^{-ℓ(e_i)}
        sum_avg: Σ 2^{-ℓ̄(e_i)}
        trace_term: Tr(2^{-Λ}P(H))
        chain_holds: sum_base ≤ sum_avg ≤ trace_term (within tolerance)
        bounded_by_one: trace_term ≤ 1 (within tolerance)
        equality_case: Every vector is a length eigenstate
        prefix_free: Verdict of condition 1 on the system
        contributions: Per-vector terms
    """

    sum_base: float
    sum_avg: float
    trace_term: float
    chain_holds: bool
    bounded_by_one: bool
    equality_case: bool
    prefix_free: bool
    contributions: tuple = ()

    @property
    def consistent(self):
        """The chain holds, and the bound by one holds whenever the system is prefix-free."""
        return self.chain_holds and (self.bounded_by_one or not self.prefix_free)

    def to_dict(self):
        return {
            "sum_base": self.sum_base,
            "sum_avg": self.sum_avg,
            "trace_term": self.trace_term,
            "chain_holds": self.chain_holds,
            "bounded_by_one": self.bounded_by_one,
            "equality_case": self.equality_case,
            "prefix_free": self.prefix_free,
            "contributions": [c.to_dict() for c in self.contributions],
        }


def kraft_report(code_set, tol=None):
    """
    Evaluate the quantum Kraft chain on an orthonormal system.

    Args:
        code_set (CodeSet or iterable of QVector): Orthonormal system
        tol (float): Comparison tolerance

    Returns:
        KraftReport

    Raises:
        NotOrthonormalError: With the first offending pair and its inner product
    """
    tol = resolve_tolerance(tol)
    code_set = CodeSet.coerce(code_set)
    failure = check_orthonormal(code_set, tol)
    if failure is not None:
        raise NotOrthonormalError(*failure)

    contributions = []
    for label, e in zip(code_set.labels, code_set):
        ell = base_length(e, tol)
        ell_bar = average_length(e, tol)
        contributions.append(KraftContribution(
            label=label,
            base_length=ell,
            average_length=ell_bar,
            base_term=2.0 ** -ell,
            average_term=2.0 ** -ell_bar,
            weight_term=length_weight(e),
            is_length_eigenstate=is_length_eigenstate(e, tol),
        ))

    sum_base = sum(c.base_term for c in contributions)
    sum_avg = sum(c.average_term for c in contributions)
    trace_term = sum(c.weight_term for c in contributions)
    prefix_free = check_prefix_free(code_set, 1, tol=tol).is_prefix_free
    report = KraftReport(
        sum_base=sum_base,
        sum_avg=sum_avg,
        trace_term=trace_term,
        chain_holds=sum_base <= sum_avg + tol and sum_avg <= trace_term + tol,
        bounded_by_one=trace_term <= 1 + tol,
        equality_case=all(c.is_length_eigenstate for c in contributions),
        prefix_free=prefix_free,
        contributions=tuple(contributions),
    )
    logger.debug(f"Kraft chain {sum_base:.10g} / {sum_avg:.10g} / {trace_term:.10g}, prefix-free={prefix_free}")
    return report
