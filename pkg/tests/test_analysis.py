#!/usr/bin/env python3
"""
Test suite for code sets, the prefix-free conditions, distinguishability
and orthonormal bases.
"""

import math
import os
import sys
import unittest

import numpy as np

# Add the parent directory to the path so we can import the module
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from qprefix.analysis import (
    CodeSet,
    basis_rotation_preserves,
    check_all_conditions,
    check_orthonormal,
    check_prefix_free,
    conditions_agree,
    distinguishability,
    distinguishes_all,
    is_orthonormal,
    orthonormalize,
    rotate,
    subspace_length_weight,
)
from qprefix.core import LAMBDA, QVector
from qprefix.errors import NotOrthonormalError, NotUnitaryError
from qprefix.sampling import make_rng, random_classical_code, random_unitary, random_vector

R = 1 / math.sqrt(2)


def strange_set():
    e_1 = QVector({"1": R, "01": R})
    e_2 = QVector({"10": R, "010": -R})
    return CodeSet((e_1, e_2))


def classical_set(strings):
    return CodeSet(tuple(QVector.basis(s) for s in strings))


class TestCodeSet(unittest.TestCase):
    """Validation and orthonormality."""

    def test_default_labels(self):
        self.assertEqual(strange_set().labels, ("e_1", "e_2"))

    def test_rejects_bad_members(self):
        with self.assertRaises(TypeError):
            CodeSet(("0",))
        with self.assertRaises(ValueError):
            CodeSet((QVector(),))
        with self.assertRaises(ValueError):
            CodeSet((QVector.basis("0"),), ("a", "b"))

    def test_orthonormality(self):
        self.assertTrue(is_orthonormal(strange_set()))
        skewed = CodeSet((QVector.basis("0"), QVector({"0": R, "1": R})), ("a", "b"))
        first, second, overlap = check_orthonormal(skewed)
        self.assertEqual((first, second), ("a", "b"))
        self.assertAlmostEqual(overlap, R)

    def test_gram_matrix(self):
        self.assertTrue(np.allclose(strange_set().gram_matrix(), np.eye(2)))


class TestPrefixFree(unittest.TestCase):
    """The four equivalent formulations and their witnesses."""

    def test_strange_set_is_prefix_free(self):
        for verdict in check_all_conditions(strange_set()):
            self.assertTrue(verdict.is_prefix_free, f"condition {verdict.condition_used}")
            self.assertIsNone(verdict.witness)

    def test_self_prefix_witness(self):
        self_prefix = CodeSet((QVector({"": R, "0": R}),))
        verdict = check_prefix_free(self_prefix, 1)
        self.assertFalse(verdict.is_prefix_free)
        self.assertEqual(verdict.witness.describe(), "s=0 overlap 0.5")
        self.assertEqual((verdict.witness.left_index, verdict.witness.right_index), (0, 0))

    def test_witnesses_recompute(self):
        self_prefix = CodeSet((QVector({"": R, "0": R}),))
        for verdict in check_all_conditions(self_prefix):
            self.assertFalse(verdict.is_prefix_free)
            witness = verdict.witness
            self.assertAlmostEqual(witness.recompute(self_prefix), witness.overlap)

    def test_classical_prefix_pair(self):
        verdict = check_prefix_free(classical_set(["0", "01"]), 1)
        self.assertFalse(verdict.is_prefix_free)
        self.assertEqual(verdict.witness.describe(), "s=1 overlap 1")
        self.assertEqual((verdict.witness.left_index, verdict.witness.right_index), (1, 0))

    def test_condition_two_witness_is_normalized(self):
        code_set = CodeSet((QVector({"": R, "0": 0.5, "1": 0.5}),))
        verdict = check_prefix_free(code_set, 2)
        self.assertFalse(verdict.is_prefix_free)
        self.assertAlmostEqual(verdict.witness.right_suffix.norm, 1.0)
        self.assertAlmostEqual(verdict.witness.recompute(code_set), verdict.witness.overlap)
        self.assertAlmostEqual(verdict.witness.overlap.real, 0.5)

    def test_random_classical_codes(self):
        rng = make_rng(17)
        for _ in range(30):
            code = random_classical_code(rng, 3)
            self.assertTrue(all(v.is_prefix_free for v in check_all_conditions(classical_set(code))))

    def test_conditions_agree_on_random_sets(self):
        rng = make_rng(19)
        verdicts = set()
        for trial in range(200):
            if trial % 2:
                code_set = CodeSet((random_vector(rng, 2, terms=2), random_vector(rng, 2, terms=2)))
            else:
                code = random_classical_code(rng, 2)
                code_set = classical_set(code[:2])
            self.assertTrue(conditions_agree(code_set), f"trial {trial}")
            verdicts.add(check_prefix_free(code_set).is_prefix_free)
        self.assertEqual(verdicts, {True, False})

    def test_unknown_condition(self):
        with self.assertRaises(ValueError):
            check_prefix_free(strange_set(), 5)

    def test_verdict_to_dict(self):
        data = check_prefix_free(classical_set(["0", "01"]), 1).to_dict(classical_set(["0", "01"]))
        self.assertFalse(data["prefix_free"])
        self.assertEqual(data["witness"]["left_label"], "e_2")
        self.assertEqual(data["witness"]["right_label"], "e_1")


class TestDistinguishability(unittest.TestCase):
    """⟨ψ|φ^{ℓ(ψ)}|ψ⟩ and its link to prefix-freeness."""

    def test_strange_pair(self):
        e_1, e_2 = strange_set()
        self.assertAlmostEqual(distinguishability(e_2, e_1), 0.25)
        self.assertFalse(distinguishes_all(strange_set()))

    def test_classical_codes_are_distinguishable(self):
        self.assertTrue(distinguishes_all(classical_set(["0", "10", "11"])))
        self.assertAlmostEqual(distinguishability(QVector.basis("01"), QVector.basis("0")), 1.0)

    def test_length_eigenstates(self):
        code_set = CodeSet((QVector({"00": R, "11": R}), QVector({"00": R, "11": -R})))
        self.assertTrue(check_prefix_free(code_set).is_prefix_free)
        self.assertTrue(distinguishes_all(code_set))


class TestOrthonormalBases(unittest.TestCase):
    """Gram-Schmidt, rotations and Tr(2^{-Λ}P)."""

    def test_orthonormalize_drops_dependent_vectors(self):
        spanning = [QVector.basis("0"), QVector({"0": 1.0, "1": 1.0}), QVector({"0": 2.0})]
        basis = orthonormalize(spanning)
        self.assertEqual(basis.labels, ("e_1", "e_2"))
        self.assertTrue(is_orthonormal(basis))
        self.assertTrue(basis[1].isclose(QVector.basis("1")))

    def test_subspace_length_weight(self):
        self.assertAlmostEqual(subspace_length_weight([QVector.basis("0"), QVector.basis("1")]), 1.0)
        spanning = [QVector({"": 1.0, "0": 1.0}), LAMBDA]
        self.assertAlmostEqual(subspace_length_weight(spanning), 1.5)

    def test_rotations_preserve_verdicts(self):
        rng = make_rng(23)
        for trial in range(50):
            code_set = strange_set() if trial % 2 else classical_set(["0", "10", "11"])
            rotation = random_unitary(rng, len(code_set))
            verdict = basis_rotation_preserves(code_set, rotation)
            self.assertTrue(verdict.is_prefix_free, f"trial {trial}")
            self.assertTrue(is_orthonormal(rotate(code_set, rotation)))

    def test_rotations_preserve_failure(self):
        rng = make_rng(29)
        code_set = orthonormalize([QVector.basis("0"), QVector.basis("01")])
        for _ in range(5):
            verdict = basis_rotation_preserves(code_set, random_unitary(rng, 2))
            self.assertFalse(verdict.is_prefix_free)

    def test_rotation_checks(self):
        with self.assertRaises(NotUnitaryError):
            rotate(strange_set(), np.ones((2, 2)))
        with self.assertRaises(NotUnitaryError):
            rotate(strange_set(), np.eye(3))
        skewed = CodeSet((QVector.basis("0"), QVector({"0": R, "1": R})))
        with self.assertRaises(NotOrthonormalError):
            basis_rotation_preserves(skewed, np.eye(2))


if __name__ == "__main__":
    unittest.main()
