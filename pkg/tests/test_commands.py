#!/usr/bin/env python3
"""
Test suite for the command-line front end: output, JSON reports and exit codes.
"""

import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

# Add the parent directory to the path so we can import the module
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from qprefix.__main__ import main
from qprefix.codebook import parse_codebook
from qprefix.config import CODEBOOKS_DIR


def codebook_path(name):
    return os.path.join(CODEBOOKS_DIR, name)


def run_main(*argv):
    """Run the CLI and capture (exit code, stdout, stderr)."""
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main([*argv, "--no-log-file"])
    return code, stdout.getvalue(), stderr.getvalue()


class CommandTestCase(unittest.TestCase):
    """Provides a scratch directory for generated input files."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def write(self, name, content):
        path = os.path.join(self.temp_dir, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(content)
        return path

    def write_codebook(self, name, vectors):
        return self.write(name, json.dumps({"format_version": 1, "vectors": vectors}))


class TestEval(CommandTestCase):

    def test_prefix_longer_than_the_string(self):
        code, out, _ = run_main("eval", "dm(|0>)^1000000000")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "|0><0|")

    def test_restriction_beyond_cell_limit(self):
        code, _, err = run_main("eval", "dm(|0>)[1:2000000000]")
        self.assertEqual(code, 2)
        self.assertIn("1:9:", err)
        self.assertIn("exceeds the cell limit", err)

    def test_worked_prefix_example(self):
        code, out, _ = run_main("eval", "dm(1/sqrt(2)*|1> + 1/sqrt(2)*|110>)^2")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "0.5 |1><1| + 0.5 |11><11|")

    def test_unnormalized_result_is_annotated(self):
        code, out, _ = run_main("eval", "(3/5*|e>+4/5*|0>) (x)[{1}] |1>")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["0.8 |01>", "norm = 0.8 (unnormalized)"])

    def test_json(self):
        code, out, _ = run_main("eval", "norm((3/5*|e>+4/5*|0>) (x)[{1}] |1>)", "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["value"]["kind"], "scalar")
        self.assertAlmostEqual(float(report["value"]["re"]), 0.8)
        self.assertIsNone(report["norm"])

    def test_codebook_bindings(self):
        code, out, _ = run_main("eval", "<e_1|e_2>", "--bindings", codebook_path('strange.json'))
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "0")

    def test_let_bindings(self):
        path = self.write('bindings.txt', "let psi = 1/sqrt(2)*|0> + 1/sqrt(2)*|1>\nlet phi = psi . psi;\n")
        code, out, _ = run_main("eval", "norm(phi)", "--bindings", path)
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "1")

    def test_syntax_error(self):
        code, out, err = run_main("eval", "<|0| , |0|>")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("qprefix: error:", err)
        self.assertIn("unbalanced ket delimiter", err)

    def test_evaluation_error(self):
        code, _, err = run_main("eval", "psi . |0>")
        self.assertEqual(code, 3)
        self.assertIn("unbound variable 'psi'", err)

    def test_missing_bindings_file(self):
        code, _, _ = run_main("eval", "|0>", "--bindings", os.path.join(self.temp_dir, 'missing.txt'))
        self.assertEqual(code, 2)


class TestCheck(CommandTestCase):

    def test_prefix_free(self):
        code, out, _ = run_main("check", codebook_path('strange.json'))
        self.assertEqual(code, 0)
        self.assertIn("orthonormal: yes (2 vectors)", out)
        self.assertIn("prefix-free under conditions 1–4", out)

    def test_self_prefix(self):
        code, out, _ = run_main("check", codebook_path('self_prefix.json'))
        self.assertEqual(code, 1)
        self.assertIn("orthonormal: yes (1 vector)\n", out)
        self.assertIn("not prefix-free: witness (e_1, e_1) s=0 overlap 0.5", out)

    def test_single_condition(self):
        path = self.write_codebook('pair.json', [
            {"label": "short", "terms": [{"string": "0", "re": "1"}]},
            {"label": "long", "terms": [{"string": "01", "re": "1"}]},
        ])
        code, out, _ = run_main("check", path, "--condition", "3")
        self.assertEqual(code, 1)
        self.assertIn("not prefix-free: witness (", out)
        self.assertIn("3 | not prefix-free", out)

    def test_json(self):
        code, out, _ = run_main("check", codebook_path('classical.json'), "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["prefix_free"])
        self.assertTrue(report["orthonormal"])
        self.assertEqual(len(report["verdicts"]), 4)
        self.assertEqual([v["label"] for v in report["codebook"]["vectors"]], ["a", "b", "c"])
        self.assertEqual(parse_codebook(json.dumps(report["codebook"])).labels, ("a", "b", "c"))

    def test_zero_vector(self):
        path = self.write_codebook('zero.json', [{"terms": [{"string": "0", "re": "0"}]}])
        code, _, err = run_main("check", path)
        self.assertEqual(code, 2)
        self.assertIn("is zero", err)


class TestKraft(CommandTestCase):

    def test_strict_chain(self):
        code, out, _ = run_main("kraft", codebook_path('kraft_example.json'))
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "0.625 ≤ 0.7803300859 ≤ 0.8125 ≤ 1")
        self.assertIn("strict: some vector is not a length eigenstate", lines)
        self.assertIn("prefix-free: yes", lines)

    def test_equality_case(self):
        code, out, _ = run_main("kraft", codebook_path('classical.json'))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("1 = 1 = 1 ≤ 1\n"))
        self.assertIn("equality case: every vector is a length eigenstate", out)

    def test_json(self):
        code, out, _ = run_main("kraft", codebook_path('kraft_example.json'), "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["chain"], "0.625 ≤ 0.7803300859 ≤ 0.8125 ≤ 1")

    def test_not_orthonormal(self):
        path = self.write_codebook('overlap.json', [
            {"terms": [{"string": "0", "re": "1"}]},
            {"terms": [{"string": "0", "re": "0.7071067811865476"}, {"string": "1", "re": "0.7071067811865476"}]},
        ])
        code, out, err = run_main("kraft", path)
        self.assertEqual(code, 3)
        self.assertEqual(out, "")
        self.assertIn("inner product", err)


class TestRestrictAndConcat(CommandTestCase):

    def test_prefix_with_oracle(self):
        code, out, _ = run_main("restrict", "1/sqrt(2)*|1> + 1/sqrt(2)*|110>", "--prefix", "2", "--oracle")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "0.5 |1><1| + 0.5 |11><11|")
        self.assertTrue(lines[1].startswith("oracle agrees: max deviation"))

    def test_indices(self):
        code, out, _ = run_main("restrict", "dm(|01>)", "--indices", "{2}", "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["rendered"], "|1><1|")
        self.assertAlmostEqual(report["trace"], 1.0)

    def test_malformed_index_set(self):
        code, _, err = run_main("restrict", "dm(|01>)", "--indices", "[2,1]")
        self.assertEqual(code, 2)
        self.assertIn("malformed index range", err)

    def test_prefix_longer_than_the_string(self):
        code, out, _ = run_main("restrict", "|0>", "--prefix", "1000000000")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "|0><0|")
        code, out, _ = run_main("restrict", "|0>", "--prefix", "1000000000", "--oracle", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["index_set"], "[1,1]")

    def test_index_set_beyond_cell_limit(self):
        code, _, err = run_main("restrict", "dm(|01>)", "--indices", "[1,2000000000]")
        self.assertEqual(code, 2)
        self.assertIn("exceeds the cell limit", err)
        code, _, err = run_main("restrict", "dm(|01>)", "--indices", "[2000000000,inf)")
        self.assertEqual(code, 2)

    def test_unnormalized_vector(self):
        code, _, _ = run_main("restrict", "|0> + |1>", "--prefix", "1")
        self.assertEqual(code, 3)

    def test_target_is_required(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                main(["restrict", "|0>", "--no-log-file"])
        self.assertEqual(context.exception.code, 2)

    def test_concat_cancellation(self):
        code, out, _ = run_main(
            "concat", "1/sqrt(2)*|0> + 1/sqrt(2)*|00>", "1/sqrt(2)*|0> - 1/sqrt(2)*|00>"
        )
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "0.5 |00> - 0.5 |0000>")
        self.assertIn("lost weight 0.5", lines[1])

    def test_concat_needs_vectors(self):
        code, _, _ = run_main("concat", "dm(|0>)", "|1>")
        self.assertEqual(code, 3)


class TestOracle(CommandTestCase):

    def test_random_trials(self):
        code, out, _ = run_main("oracle", "--cells", "5", "--trials", "100", "--seed", "7", "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual((report["trials"], report["seed"]), (100, 7))
        self.assertLess(report["max_restriction_deviation"], 1e-12)
        self.assertLess(report["max_duality_deviation"], 1e-12)
        self.assertTrue(report["passed"])

    def test_text_report(self):
        code, out, _ = run_main("oracle", "--cells", "3", "--trials", "5", "--seed", "7")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "oracle: 5 trials over 3 cells (seed 7)")
        self.assertTrue(lines[1].startswith("max restriction deviation: "))
        self.assertTrue(lines[2].startswith("max duality deviation: "))
        self.assertEqual(lines[-1], "PASS")

    def test_workers_give_the_same_report(self):
        reports = []
        for workers in ("1", "3"):
            code, out, _ = run_main("oracle", "--cells", "4", "--trials", "12", "--seed", "3",
                                    "--workers", workers, "--json")
            self.assertEqual(code, 0)
            reports.append(json.loads(out))
        self.assertEqual(reports[0], reports[1])
        self.assertTrue(reports[0]["passed"])

    def test_codebook_prefixes(self):
        code, out, _ = run_main("oracle", "--codebook", codebook_path('kraft_example.json'))
        self.assertEqual(code, 0)
        # Three vectors, prefixes [1,n] for n = 0..5
        self.assertTrue(out.startswith("oracle: 18 trials over 5 cells"))

    def test_worked_prefix_example(self):
        code, out, _ = run_main("oracle", "--expr", "dm(1/sqrt(2)*|1> + 1/sqrt(2)*|110>)", "--indices", "[1,2]")
        self.assertEqual(code, 0)
        self.assertIn("max restriction deviation: ", out)
        self.assertNotIn("duality", out)

    def test_expression_with_indices(self):
        code, out, _ = run_main("oracle", "--expr", "dm(|0110>)", "--indices", "{1,3}", "--cells", "4")
        self.assertEqual(code, 0)
        self.assertIn("PASS", out)

    def test_cell_guard(self):
        code, out, err = run_main("oracle", "--cells", "12")
        self.assertEqual(code, 4)
        self.assertEqual(out, "")
        self.assertIn("qprefix: error:", err)


if __name__ == "__main__":
    unittest.main()
