#!/usr/bin/env python3
"""
Differential tests: sparse restriction against the dense tape oracle, and
the duality between restriction and tensoring with the identity.
"""

import math
import os
import sys
import unittest
from unittest import mock

import numpy as np

# Add the parent directory to the path so we can import the module
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from qprefix.config import ORACLE_MAX_CELLS
from qprefix.core import QOperator, QVector, density_from_vector
from qprefix.errors import CapacityError, OracleGuardError
from qprefix.sampling import (
    make_rng,
    random_density,
    random_hermitian,
    random_index_set,
    spawn_seeds,
)
from qprefix.tape import (
    IndexSet,
    check_oracle_guard,
    duality_trial,
    oracle_restrict,
    prefix,
    restrict,
    restriction_trial,
    tensor,
)
from qprefix.tape import operations
from qprefix.tape.oracle import bit_string_mask, dense_tape_matrix, partial_trace

R = 1 / math.sqrt(2)
AGREEMENT = 1e-12


class TestDenseOracle(unittest.TestCase):
    """The brute-force contraction itself."""

    def test_dense_matrix_has_unit_trace(self):
        rho = density_from_vector(QVector({"0": R, "11": R}))
        matrix = dense_tape_matrix(rho, 3)
        self.assertEqual(matrix.shape, (27, 27))
        self.assertAlmostEqual(np.trace(matrix).real, 1.0)

    def test_full_partial_trace_is_trace(self):
        rho = density_from_vector(QVector({"0": R, "11": R}))
        reduced = partial_trace(dense_tape_matrix(rho, 2), 2, ())
        self.assertEqual(reduced.shape, (1, 1))
        self.assertAlmostEqual(reduced[0, 0].real, 1.0)

    def test_mask_marks_bit_string_configurations(self):
        # 00 01 0# 10 11 1# ## but not #0 #1
        mask = bit_string_mask(2)
        self.assertEqual(mask.dtype, np.bool_)
        self.assertEqual(mask.shape, (9,))
        self.assertEqual(int(mask.sum()), 7)
        self.assertEqual(mask.tolist(), [True, True, True, True, True, True, False, False, True])
        self.assertEqual(bit_string_mask(0).tolist(), [True])

    def test_worked_example(self):
        rho = density_from_vector(QVector({"1": R, "110": R}))
        expected = QOperator({("1", "1"): 0.5, ("11", "11"): 0.5})
        for cells in (3, 4, 5):
            self.assertTrue(oracle_restrict(rho, IndexSet.interval(1, 2), cells).isclose(expected, AGREEMENT))

    def test_mixed_length_superposition(self):
        rho = density_from_vector(QVector({"00": R, "1111": -R}))
        expected = QOperator({("00", "00"): 0.5, ("111", "111"): 0.5})
        for cells in (4, 5):
            dense = oracle_restrict(rho, IndexSet.interval(1, 3), cells)
            self.assertTrue(dense.isclose(expected, AGREEMENT))
            self.assertTrue(dense.isclose(restrict(rho, IndexSet.interval(1, 3)), AGREEMENT))

    def test_prefix_of_product(self):
        rho = density_from_vector(QVector.basis("11"))
        product = tensor(rho, density_from_vector(QVector({"0": R, "10": R})))
        for cells in (4, 5):
            dense = oracle_restrict(product, IndexSet.interval(1, 2), cells)
            self.assertTrue(dense.isclose(rho, AGREEMENT))
            self.assertTrue(dense.isclose(prefix(product, 2), AGREEMENT))

    def test_strange_vector_prefix(self):
        rho = density_from_vector(QVector({"10": R, "010": -R}))
        expected = QOperator({("10", "10"): 0.5, ("01", "01"): 0.5})
        self.assertTrue(oracle_restrict(rho, IndexSet.interval(1, 2), 4).isclose(expected, AGREEMENT))

    def test_guard(self):
        check_oracle_guard(ORACLE_MAX_CELLS)
        with self.assertRaises(OracleGuardError) as context:
            oracle_restrict(QOperator.outer(QVector.basis("0")), IndexSet.interval(1, 1), ORACLE_MAX_CELLS + 1)
        self.assertEqual(context.exception.exit_code, 4)

    def test_too_few_cells(self):
        rho = density_from_vector(QVector.basis("110"))
        with self.assertRaises(CapacityError):
            oracle_restrict(rho, IndexSet.interval(1, 1), 2)


class TestOracleAgreement(unittest.TestCase):
    """Randomized agreement between sparse and dense restriction."""

    def test_random_restrictions(self):
        for seed in spawn_seeds(7, 100):
            rng = make_rng(seed)
            rho = random_density(rng, max_length=5)
            index_set = random_index_set(rng, max_cell=5)
            deviation = restriction_trial(rho, index_set, 5)
            self.assertLess(deviation, AGREEMENT, f"{index_set}")

    def test_cofinite_sets(self):
        rng = make_rng(12)
        for index_set in (IndexSet.tail(2), IndexSet.finite([2]).complement(), IndexSet.naturals()):
            rho = random_density(rng, max_length=3)
            self.assertLess(restriction_trial(rho, index_set, 4), AGREEMENT)

    def test_extra_cells_do_not_matter(self):
        rng = make_rng(13)
        rho = random_density(rng, max_length=3)
        index_set = IndexSet.finite([1, 3])
        sparse = restrict(rho, index_set)
        for cells in (3, 4, 5):
            self.assertTrue(oracle_restrict(rho, index_set, cells).isclose(sparse, AGREEMENT))


class TestDuality(unittest.TestCase):
    """Tr(ρ_I A) = Tr(ρ (A ⊗_I 1)) for observables A on I."""

    def test_random_duality(self):
        for seed in spawn_seeds(21, 200):
            rng = make_rng(seed)
            rho = random_density(rng, max_length=3)
            index_set = random_index_set(rng, max_cell=5)
            kept = len(index_set.cells(5))
            observable = random_hermitian(rng, max_length=min(kept, 3))
            self.assertLess(duality_trial(rho, observable, index_set), 1e-9, f"{index_set}")

    def test_duality_does_not_report_norm_loss(self):
        rho = density_from_vector(QVector({"1": R, "110": R}))
        observable = QOperator.outer(QVector.basis("11"))
        with mock.patch.object(operations.logger, "warning") as warning:
            duality_trial(rho, observable, IndexSet.finite([1, 3]))
        warning.assert_not_called()

    def test_prefix_duality_example(self):
        rho = density_from_vector(QVector({"1": R, "110": R}))
        observable = QOperator.outer(QVector.basis("11"))
        self.assertLess(duality_trial(rho, observable, IndexSet.interval(1, 2)), 1e-12)


if __name__ == "__main__":
    unittest.main()
