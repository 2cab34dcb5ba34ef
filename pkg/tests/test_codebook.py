#!/usr/bin/env python3
"""
Test suite for reading, validating and writing codebook files.
"""

import json
import math
import os
import sys
import tempfile
import unittest

# Add the parent directory to the path so we can import the module
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from qprefix.analysis import CodeSet
from qprefix.codebook import codebook_to_dict, dump_codebook, parse_codebook, read_codebook, write_codebook
from qprefix.config import CODEBOOKS_DIR
from qprefix.core import QVector
from qprefix.errors import CodebookFormatError

R = 1 / math.sqrt(2)


def _document(vectors, **extra):
    document = {"format_version": 1, "vectors": vectors}
    document.update(extra)
    return json.dumps(document)


class TestReadCodebook(unittest.TestCase):
    """The shipped codebooks."""

    def test_strange(self):
        codebook = read_codebook(os.path.join(CODEBOOKS_DIR, 'strange.json'))
        self.assertEqual(codebook.labels, ("e_1", "e_2"))
        e_1, e_2 = codebook.code_set.vectors
        self.assertTrue(e_1.isclose(QVector({"1": R, "01": R})))
        self.assertTrue(e_2.isclose(QVector({"10": R, "010": -R})))
        self.assertIn("description", codebook.metadata)

    def test_self_prefix_uses_empty_string(self):
        codebook = read_codebook(os.path.join(CODEBOOKS_DIR, 'self_prefix.json'))
        (vector,) = codebook.code_set.vectors
        self.assertTrue(vector.isclose(QVector({"": R, "0": R})))

    def test_bindings(self):
        codebook = read_codebook(os.path.join(CODEBOOKS_DIR, 'classical.json'))
        bindings = codebook.bindings()
        self.assertEqual(sorted(bindings), ["a", "b", "c"])
        self.assertTrue(bindings["b"].isclose(QVector.basis("10")))

    def test_missing_file(self):
        with self.assertRaises(CodebookFormatError) as context:
            read_codebook(os.path.join(CODEBOOKS_DIR, 'no_such_file.json'))
        self.assertEqual(context.exception.exit_code, 2)


class TestParseCodebook(unittest.TestCase):
    """Validation of codebook documents."""

    def test_defaults(self):
        codebook = parse_codebook(_document([{"terms": [{"string": "01"}, {"string": "1", "re": 1}]}]))
        self.assertEqual(codebook.labels, ("e_1",))
        # Missing amplitudes default to zero
        self.assertTrue(codebook.code_set.vectors[0].isclose(QVector.basis("1")))
        self.assertEqual(codebook.metadata, {})

    def test_complex_amplitudes(self):
        codebook = parse_codebook(_document([{"terms": [{"string": "0", "re": "0", "im": "1"}]}]))
        self.assertTrue(codebook.code_set.vectors[0].isclose(QVector({"0": 1j})))

    def test_errors(self):
        cases = {
            "{": "invalid JSON",
            "[]": "top level must be an object",
            json.dumps({"format_version": 2, "vectors": []}): "unsupported format_version",
            json.dumps({"format_version": 1}): "'vectors' must be a list",
            _document([]): "no vectors",
            _document([{"terms": [{"string": "0", "re": "1"}]}], metadata=[]): "'metadata' must be an object",
            _document(["0"]): "expected an object",
            _document([{"label": "", "terms": []}]): "non-empty string",
            _document([{"label": "a"}]): "terms: expected a list",
            _document([{"terms": [{"re": "1"}]}]): "'string' field",
            _document([{"terms": [{"string": "012", "re": "1"}]}]): "invalid character '2'",
            _document([{"terms": [{"string": "0", "re": "one"}]}]): "not a decimal number",
            _document([{"terms": [{"string": "0", "re": True}]}]): "expected a decimal string",
            _document([{"terms": [{"string": "0", "re": "1"}, {"string": "0", "re": "-1"}]}]): "is zero",
            _document([{"label": "a", "terms": [{"string": "0", "re": "1"}]},
                       {"label": "a", "terms": [{"string": "1", "re": "1"}]}]): "duplicate labels a",
        }
        for text, fragment in cases.items():
            with self.assertRaises(CodebookFormatError, msg=text) as context:
                parse_codebook(text, source="test.json")
            self.assertIn(fragment, str(context.exception), text)
            self.assertTrue(str(context.exception).startswith("test.json"), text)


class TestWriteCodebook(unittest.TestCase):
    """Serialization of code sets."""

    def setUp(self):
        self.code_set = CodeSet(
            (QVector({"1": R, "01": R}), QVector({"": 0.6, "11": 0.8j})),
            ("left", "right"),
        )

    def test_document_shape(self):
        document = codebook_to_dict(self.code_set, {"source": "unit test"})
        self.assertEqual(document["format_version"], 1)
        self.assertEqual([v["label"] for v in document["vectors"]], ["left", "right"])
        self.assertEqual(document["vectors"][1]["terms"][0]["string"], "")
        self.assertEqual(document["metadata"], {"source": "unit test"})

    def test_amplitudes_survive_a_file(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, 'codes.json')
            write_codebook(path, self.code_set, {"source": "unit test"})
            codebook = read_codebook(path)
        self.assertEqual(codebook.labels, ("left", "right"))
        for written, read in zip(self.code_set.vectors, codebook.code_set.vectors):
            self.assertTrue(written.isclose(read, 0))
        self.assertEqual(codebook.metadata, {"source": "unit test"})

    def test_dump_is_utf8_text(self):
        text = dump_codebook(self.code_set)
        self.assertTrue(text.endswith("\n"))
        self.assertEqual(parse_codebook(text).labels, ("left", "right"))


if __name__ == "__main__":
    unittest.main()
