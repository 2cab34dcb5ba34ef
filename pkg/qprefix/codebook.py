#!/usr/bin/env python3
"""
Codebook files: JSON lists of labelled qubit strings.

    {
      "format_version": 1,
      "vectors": [
        {"label": "e_1",
         "terms": [{"string": "1", "re": "0.7071067811865476", "im": "0"}, ...]},
        ...
      ],
      "metadata": {...}
    }

Amplitudes are decimal strings so files stay diff-able; they are parsed at
full double precision. The empty string λ is written "".
"""

import json
import logging
from dataclasses import dataclass, field

from qprefix.analysis.codes import CodeSet
from qprefix.config import CODEBOOK_FORMAT_VERSION
from qprefix.core.states import QVector
from qprefix.core.strings import parse_bitstring
from qprefix.errors import BitStringParseError, CodebookFormatError
from qprefix.utils.filesystem import get_file_contents, write_file_contents

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Codebook:
    """A validated codebook file."""

    code_set: CodeSet
    metadata: dict = field(default_factory=dict)
    format_version: int = CODEBOOK_FORMAT_VERSION

    @property
    def labels(self):
        return self.code_set.labels

    def bindings(self):
        """Label -> vector, for use as expression variables."""
        return dict(zip(self.code_set.labels, self.code_set.vectors))


def _decimal(value, where):
    if isinstance(value, bool):
        raise CodebookFormatError(f"{where}: expected a decimal string, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise CodebookFormatError(f"{where}: expected a decimal string, got {value!r}")
    try:
        return float(value)
    except ValueError:
        raise CodebookFormatError(f"{where}: {value!r} is not a decimal number") from None


def _parse_vector(entry, index, source):
    where = f"{source}: vectors[{index}]"
    if not isinstance(entry, dict):
        raise CodebookFormatError(f"{where}: expected an object")
    label = entry.get("label", f"e_{index + 1}")
    if not isinstance(label, str) or not label:
        raise CodebookFormatError(f"{where}.label: expected a non-empty string")
    terms = entry.get("terms")
    if not isinstance(terms, list):
        raise CodebookFormatError(f"{where}.terms: expected a list")
    pairs = []
    for j, term in enumerate(terms):
        term_where = f"{where}.terms[{j}]"
        if not isinstance(term, dict) or "string" not in term:
            raise CodebookFormatError(f"{term_where}: expected an object with a 'string' field")
        text = term["string"]
        if not isinstance(text, str):
            raise CodebookFormatError(f"{term_where}.string: expected a string")
        try:
            string = parse_bitstring(text)
        except BitStringParseError as e:
            raise CodebookFormatError(f"{term_where}.string: {e}") from e
        real = _decimal(term.get("re", "0"), f"{term_where}.re")
        imag = _decimal(term.get("im", "0"), f"{term_where}.im")
        pairs.append((string, complex(real, imag)))
    vector = QVector(pairs)
    if vector.is_zero:
        raise CodebookFormatError(f"{where}: vector '{label}' is zero")
    return label, vector


def parse_codebook(text, source="<codebook>"):
    """
    Parse and validate codebook JSON.

    Args:
        text (str): JSON document
        source (str): Name used in error messages

    Returns:
        Codebook

    Raises:
        CodebookFormatError: On malformed JSON or any validation failure
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise CodebookFormatError(f"{source}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(document, dict):
        raise CodebookFormatError(f"{source}: top level must be an object")

    version = document.get("format_version")
    if version != CODEBOOK_FORMAT_VERSION:
        raise CodebookFormatError(
            f"{source}: unsupported format_version {version!r} (expected {CODEBOOK_FORMAT_VERSION})"
        )
    entries = document.get("vectors")
    if not isinstance(entries, list):
        raise CodebookFormatError(f"{source}: 'vectors' must be a list")
    if not entries:
        raise CodebookFormatError(f"{source}: codebook has no vectors")
    metadata = document.get("metadata", {})
    if not isinstance(metadata, dict):
        raise CodebookFormatError(f"{source}: 'metadata' must be an object")

    parsed = [_parse_vector(entry, i, source) for i, entry in enumerate(entries)]
    labels = [label for label, _ in parsed]
    duplicates = sorted({label for label in labels if labels.count(label) > 1})
    if duplicates:
        raise CodebookFormatError(f"{source}: duplicate labels {', '.join(duplicates)}")

    code_set = CodeSet(tuple(v for _, v in parsed), tuple(labels))
    logger.debug(f"Parsed codebook {source} with {len(code_set)} vectors")
    return Codebook(code_set, metadata, version)


def read_codebook(file_path):
    """
    Load a codebook file.

    Raises:
        CodebookFormatError: If the file cannot be read or fails validation
    """
    try:
        text = get_file_contents(file_path)
    except OSError as e:
        raise CodebookFormatError(f"{file_path}: {e.strerror or e}") from e
    logger.info(f"Loaded codebook {file_path}")
    return parse_codebook(text, source=str(file_path))


def codebook_to_dict(code_set, metadata=None):
    """JSON-ready codebook document for `code_set`."""
    code_set = CodeSet.coerce(code_set)
    return {
        "format_version": CODEBOOK_FORMAT_VERSION,
        "vectors": [
            {
                "label": label,
                "terms": [
                    {"string": s.bits, "re": repr(a.real), "im": repr(a.imag)}
                    for s, a in vector.items()
                ],
            }
            for label, vector in zip(code_set.labels, code_set.vectors)
        ],
        "metadata": dict(metadata or {}),
    }


def dump_codebook(code_set, metadata=None):
    return json.dumps(codebook_to_dict(code_set, metadata), indent=2, ensure_ascii=False) + "\n"


def write_codebook(file_path, code_set, metadata=None):
    write_file_contents(file_path, dump_codebook(code_set, metadata))
    logger.info(f"Wrote codebook {file_path}")
