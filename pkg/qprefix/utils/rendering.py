#!/usr/bin/env python3
"""
Text rendering of qubit strings, operators and reports.

Numbers are printed with 10 significant digits and terms are sorted by
(length, lexicographic) order of their strings, so output is stable
across runs and platforms.
"""

import logging

from tabulate import tabulate

from qprefix.config import PRUNE_TOLERANCE, resolve_tolerance
from qprefix.core.states import QOperator, QVector

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 10
TABLE_FORMAT = "github"


def format_real(value, digits=SIGNIFICANT_DIGITS):
    text = f"{float(value):.{digits}g}"
    return "0" if text == "-0" else text


def format_scalar(value, digits=SIGNIFICANT_DIGITS):
    """
    Render a complex number, dropping a negligible real or imaginary part.

    Examples: 0.5, -0.25, 0.5i, (0.5-0.5i)
    """
    value = complex(value)
    real = value.real if abs(value.real) >= PRUNE_TOLERANCE else 0.0
    imag = value.imag if abs(value.imag) >= PRUNE_TOLERANCE else 0.0
    if imag == 0.0:
        return format_real(real, digits)
    if real == 0.0:
        return f"{format_real(imag, digits)}i"
    sign = "-" if imag < 0 else "+"
    return f"({format_real(real, digits)}{sign}{format_real(abs(imag), digits)}i)"


def _ket(string):
    return f"|{string}>"


def _join_terms(terms, digits):
    """Join (coefficient, basis text) pairs into '0.5 |0> - 0.5 |1>' form."""
    if not terms:
        return "0"
    parts = []
    for coefficient, basis in terms:
        coefficient = complex(coefficient)
        negative = abs(coefficient.imag) < PRUNE_TOLERANCE and coefficient.real < 0
        magnitude = -coefficient if negative else coefficient
        if abs(magnitude - 1) < PRUNE_TOLERANCE:
            body = basis
        else:
            body = f"{format_scalar(magnitude, digits)} {basis}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def render_vector(vector, digits=SIGNIFICANT_DIGITS):
    """e.g. '0.5 |00> - 0.5 |0000>'; λ is written |e>."""
    return _join_terms([(a, _ket(s)) for s, a in vector.items()], digits)


def render_operator(operator, digits=SIGNIFICANT_DIGITS):
    """e.g. '0.5 |1><1| + 0.5 |11><11|'."""
    return _join_terms(
        [(c, f"{_ket(ket)}<{bra}|") for (ket, bra), c in operator.items()], digits
    )


def render_value(value, digits=SIGNIFICANT_DIGITS):
    """Render any evaluation result: vector, operator or number."""
    if isinstance(value, QVector):
        return render_vector(value, digits)
    if isinstance(value, QOperator):
        return render_operator(value, digits)
    return format_scalar(value, digits)


def value_to_json(value):
    """JSON-ready form of an evaluation result."""
    if isinstance(value, QVector):
        return {
            "kind": "vector",
            "terms": [
                {"string": s.bits, "re": repr(a.real), "im": repr(a.imag)}
                for s, a in value.items()
            ],
        }
    if isinstance(value, QOperator):
        return {
            "kind": "operator",
            "entries": [
                {"ket": k.bits, "bra": b.bits, "re": repr(c.real), "im": repr(c.imag)}
                for (k, b), c in value.items()
            ],
        }
    value = complex(value)
    return {"kind": "scalar", "re": repr(value.real), "im": repr(value.imag)}


def _relation(left, right, tol):
    if abs(left - right) <= tol:
        return "="
    return "≤" if left < right else ">"


def render_kraft_chain(report, tol=None):
    """
    The inequality chain Σ2^{-ℓ} ≤ Σ2^{-ℓ̄} ≤ Tr(2^{-Λ}P) ≤ 1.

    Inner relations print '=' when the two sides agree within `tol`; the
    final bound prints '≤' unless it is violated.
    """
    tol = resolve_tolerance(tol)
    values = [report.sum_base, report.sum_avg, report.trace_term]
    text = format_real(values[0])
    for left, right in zip(values, values[1:]):
        text += f" {_relation(left, right, tol)} {format_real(right)}"
    final = ">" if report.trace_term > 1 + tol else "≤"
    return f"{text} {final} 1"


def render_table(rows, headers):
    return tabulate(rows, headers=headers, tablefmt=TABLE_FORMAT)
