#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests clustering module.

@version  0.1.0
@license  MIT
"""


import itertools
import unittest

import numpy as np

import utils.logger as logger
from clustering import (
    Partition, PointSet, cost, distance, distance_matrix,
    enumerate_assignments, oracle_diag_min, oracle_min
)
from hamiltonians import build_onehot_k3, build_onehot_k3_pinned
from utils import SizeLimitError


SIX = PointSet(((4, -2), (-7, 7), (6, -9), (-6, 8), (-2, -6), (-9, 5)))
NINE = PointSet(((8, -1), (-2, -6), (1, 6), (4, -4), (3, 8), (9, -4),
                 (-5, 8), (-6, -8), (3, -10)))


class MyTestCase(unittest.TestCase):
    log = logger.get(__name__)

    def setUp(self):
        self.dm = distance_matrix(SIX)

    def test_distance_examples(self):
        self.assertEqual(distance((0, 0), (3, 4)), 5.0)
        self.assertEqual(distance((1, 2), (1, 2)), 0.0)
        self.assertAlmostEqual(distance((4, -2), (-7, 7)), np.sqrt(202),
                               places=12)

    def test_distance_matrix_of_identical_points_is_zero(self):
        dm = distance_matrix(PointSet(((1, 1), (1, 1))))
        np.testing.assert_array_equal(dm, np.zeros((2, 2)))

    def test_distance_matrix_spot_value(self):
        self.assertEqual(self.dm.shape, (6, 6))
        self.assertAlmostEqual(self.dm[0][2], np.sqrt(53), places=12)

    def test_distance_matrix_invariants(self):
        dm = self.dm
        np.testing.assert_array_equal(np.diag(dm), np.zeros(6))
        np.testing.assert_array_equal(dm, dm.T)
        self.assertTrue((dm >= 0).all())
        for i, j, k in itertools.product(range(6), repeat=3):
            self.assertLessEqual(dm[i][k], dm[i][j] + dm[j][k] + 1e-12)

    def test_pointset_needs_two_points(self):
        with self.assertRaises(ValueError):
            PointSet(((0, 0),))

    def test_partition_equality_ignores_labels(self):
        self.assertEqual(Partition([0, 0, 1, 2]), Partition([2, 2, 0, 1]))
        self.assertNotEqual(Partition([0, 0, 1, 2]), Partition([0, 1, 1, 2]))
        self.assertEqual(len({Partition([0, 1]), Partition([1, 0])}), 1)

    def test_partition_from_blocks(self):
        p = Partition.from_blocks([[1, 3, 5], [0, 4], [2]])
        self.assertEqual(p.blocks(), ((0, 4), (1, 3, 5), (2,)))

    def test_cost_of_singletons_is_zero(self):
        self.assertEqual(cost(self.dm, Partition(range(6), K=6)), 0.0)

    def test_cost_of_single_cluster_is_pair_total(self):
        total = self.dm[np.triu_indices(6, 1)].sum()
        self.assertAlmostEqual(cost(self.dm, Partition([0] * 6, K=3)), total,
                               places=12)

    def test_cost_is_relabeling_invariant(self):
        a = cost(self.dm, Partition([0, 1, 2, 1, 0, 1]))
        b = cost(self.dm, Partition([2, 0, 1, 0, 2, 0]))
        self.assertAlmostEqual(a, b, places=12)

    def test_cost_rejects_partial_partition(self):
        with self.assertRaises(ValueError):
            cost(self.dm, Partition([0, 1]))

    def test_enumerate_assignments_counts(self):
        self.assertEqual(len(list(enumerate_assignments(2, 3))), 9)
        fixed = {0: 0, 1: 1, 2: 2}
        self.assertEqual(len(list(enumerate_assignments(9, 3, fixed))), 729)
        self.assertEqual(len(list(enumerate_assignments(3, 3, fixed))), 1)

    def test_enumerate_assignments_honors_fixed(self):
        for p in enumerate_assignments(4, 3, {2: 1}):
            self.assertEqual(p.assignment[2], 1)

    def test_distinct_partitions_match_stirling_numbers(self):
        # S(6,1) + S(6,2) + S(6,3) = 1 + 31 + 90.
        distinct = set(enumerate_assignments(6, 3))
        self.assertEqual(len(distinct), 122)

    def test_oracle_finds_six_point_three_cluster_optimum(self):
        self.log.info('=== TEST: oracle on six points, K=3 ===')
        result = oracle_min(self.dm, 3)
        expected = Partition.from_blocks([[1, 3, 5], [0, 4], [2]])
        self.assertEqual(result.argmin_partitions, {expected})
        self.assertAlmostEqual(result.min_cost, cost(self.dm, expected),
                               places=12)

    def test_oracle_with_centroids_finds_nine_point_clusters(self):
        dm = distance_matrix(NINE)
        result = oracle_min(dm, 3, {0: 0, 1: 1, 2: 2})
        expected = Partition.from_blocks([[0, 3, 5], [1, 7, 8], [2, 4, 6]])
        self.assertIn(expected, result.argmin_partitions)

    def test_oracle_separates_two_points(self):
        dm = distance_matrix(PointSet(((0, 0), (1, 1))))
        self.assertEqual(oracle_min(dm, 2).min_cost, 0.0)

    def test_oracle_with_all_points_fixed_returns_their_cost(self):
        fixed = {0: 0, 1: 1, 2: 2, 3: 1, 4: 0, 5: 1}
        result = oracle_min(self.dm, 3, fixed)
        expected = cost(self.dm, Partition([0, 1, 2, 1, 0, 1]))
        self.assertAlmostEqual(result.min_cost, expected, places=12)
        self.assertEqual(len(result.argmin_partitions), 1)

    def test_oracle_rejects_large_instances(self):
        points = PointSet(tuple((i, 0) for i in range(13)))
        with self.assertRaises(SizeLimitError):
            oracle_min(distance_matrix(points), 3)

    def test_oracle_diag_min_of_constant_returns_everything(self):
        result = oracle_diag_min(np.full(27, 2.5))
        self.assertEqual(result.min_cost, 2.5)
        self.assertEqual(len(result.argmin_basis_states), 27)

    def test_oracle_diag_min_rejects_bad_length(self):
        with self.assertRaises(ValueError):
            oracle_diag_min(np.zeros(10))

    def test_unpinned_ground_state_is_sixfold_degenerate(self):
        result = oracle_diag_min(build_onehot_k3(self.dm))
        self.assertEqual(len(result.argmin_basis_states), 6)

    def test_pinned_ground_state_is_twofold_degenerate(self):
        result = oracle_diag_min(build_onehot_k3_pinned(self.dm))
        self.assertEqual(len(result.argmin_basis_states), 2)


if __name__ == '__main__':
    unittest.main()
