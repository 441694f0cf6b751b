from __future__ import absolute_import
from __future__ import division

import unittest

from fractions import Fraction

import numpy as np

from analysis import cut
from graphs import build_graph
from oracles import (SLOW, best_bipartition_cut, clique_edges, edge_scan_cut,
                     random_graph)
from partitioning import (BalanceSpec, Partition, bipartition, lp_refine,
                          project, recursive_bipartition)
from partitioning.initial import _fixed_epsilon, _local_epsilon


def two_triangles():
  return build_graph(clique_edges([0, 1, 2]) + clique_edges([3, 4, 5])
                     + [(2, 3)])


class BalanceSpecTest(unittest.TestCase):

  def test_uniform_limits(self):
    balance = BalanceSpec(0.03, 2, 10)
    self.assertEqual(balance.perfect_weight, 5)
    self.assertEqual(balance.max_block_weight, Fraction(515, 100))
    self.assertEqual(balance.int_limits, [5, 5])
    self.assertTrue(balance.is_feasible([5, 5]))
    self.assertFalse(balance.is_feasible([6, 4]))
    self.assertEqual(balance.overload([6, 4]), 1.2)

  def test_perfect_weight_rounds_up(self):
    balance = BalanceSpec(0.0, 3, 10)
    self.assertEqual(balance.perfect_weight, 4)
    self.assertTrue(balance.is_feasible([4, 4, 2]))

  def test_explicit_targets(self):
    balance = BalanceSpec.from_targets([Fraction(20, 3), Fraction(10, 3)], 0.5)
    self.assertEqual(balance.total_weight, 10)
    self.assertEqual(balance.limits, [10, 5])
    self.assertEqual(balance.int_limits, [10, 5])
    self.assertEqual(BalanceSpec.from_targets([0, 4], 0).overload([1, 4]),
                     float('inf'))

  def test_invalid(self):
    with self.assertRaises(ValueError):
      BalanceSpec(-0.1, 2, 10)
    with self.assertRaises(ValueError):
      BalanceSpec(0.1, 0, 10)
    with self.assertRaises(ValueError):
      BalanceSpec(0.1, 2, 10, block_targets=[5])


class PartitionTest(unittest.TestCase):

  def test_from_assignment(self):
    p = Partition.from_assignment([0, 2, 2, 0], [1, 2, 3, 4], 3)
    self.assertEqual(p.block_weights.tolist(), [5, 0, 5])
    self.assertFalse(p.balance_violated)
    with self.assertRaises(ValueError):
      Partition.from_assignment([0, 3], [1, 1], 3)
    with self.assertRaises(ValueError):
      Partition([0, 1], [1, 1], 3)


class RefinementTest(unittest.TestCase):

  def test_moves_misplaced_node(self):
    g = two_triangles()
    balance = BalanceSpec(0.0, 2, 6)
    p = Partition.from_assignment([0, 0, 1, 1, 1, 1], g.node_weights, 2)
    refined = lp_refine(g, p, balance)
    self.assertEqual(refined.assignment.tolist(), [0, 0, 0, 1, 1, 1])
    self.assertEqual(refined.block_weights.tolist(), [3, 3])
    self.assertFalse(refined.balance_violated)
    # the input is left alone
    self.assertEqual(p.assignment.tolist(), [0, 0, 1, 1, 1, 1])

  def test_full_block_blocks_moves(self):
    g = two_triangles()
    balance = BalanceSpec(0.0, 2, 6)
    p = Partition.from_assignment([0, 1, 1, 1, 1, 1], g.node_weights, 2)
    refined = lp_refine(g, p, balance)
    self.assertEqual(refined.assignment.tolist(), [0, 1, 1, 1, 1, 1])
    self.assertTrue(refined.balance_violated)

  def test_cut_never_increases(self):
    for seed in range(10):
      g = random_graph(40, 0.15, seed, max_weight=3)
      balance = BalanceSpec(0.1, 4, g.total_node_weight)
      random_state = np.random.RandomState(seed)
      p = Partition.from_assignment(np.arange(40) % 4, g.node_weights, 4)
      p = Partition.from_assignment(random_state.permutation(p.assignment),
                                    g.node_weights, 4)
      refined = lp_refine(g, p, balance, seed=seed)
      self.assertLessEqual(cut(g, refined), cut(g, p))
      self.assertEqual(cut(g, refined), edge_scan_cut(g, refined.assignment))
      self.assertTrue(balance.is_feasible(refined.block_weights))
      self.assertEqual(refined.block_weights.tolist(),
                       np.bincount(refined.assignment, minlength=4).tolist())

  def test_size_mismatch(self):
    g = two_triangles()
    with self.assertRaises(ValueError):
      lp_refine(g, Partition.from_assignment([0, 1], [1, 1], 2),
                BalanceSpec(0.0, 2, 6))


class ProjectTest(unittest.TestCase):

  def test_project(self):
    coarse = Partition([1, 0], [4, 2], 2)
    fine = project([0, 0, 1, 1], coarse)
    self.assertEqual(fine.assignment.tolist(), [1, 1, 0, 0])
    self.assertEqual(fine.block_weights.tolist(), [4, 2])
    recomputed = project([0, 0, 1, 1], coarse, node_weights=[1, 1, 2, 2])
    self.assertEqual(recomputed.block_weights.tolist(), [4, 2])
    with self.assertRaises(ValueError):
      project([0, 2], coarse)


class BipartitionTest(unittest.TestCase):

  def test_close_to_the_optimum(self):
    good = 0
    trials = 40
    for seed in range(trials):
      n = 8 + seed % 5
      g = random_graph(n, 0.4, seed)
      limit = (n + 1) // 2
      # 12% slack rounds down to ceil(n/2) for every n in [8, 12]
      p = bipartition(g, (Fraction(n, 2), Fraction(n, 2)), 0.12, seed)
      self.assertFalse(p.balance_violated)
      self.assertTrue((p.block_weights <= limit).all())
      best = best_bipartition_cut(g, limit)
      found = cut(g, p)
      self.assertGreaterEqual(found, best)
      if found <= 1.5 * best + 1:
        good += 1
    self.assertGreaterEqual(good, 0.8 * trials)

  @unittest.skipUnless(SLOW, "set LINPART_SLOW_TESTS=1 to run")
  def test_close_to_the_optimum_on_larger_graphs(self):
    good = 0
    trials = 100
    for seed in range(trials):
      n = 8 + seed % 9
      g = random_graph(n, 0.4, 1000 + seed)
      limit = (n + 1) // 2
      # 12% slack still rounds down to ceil(n/2) for n up to 16
      p = bipartition(g, (Fraction(n, 2), Fraction(n, 2)), 0.12, seed)
      self.assertTrue((p.block_weights <= limit).all())
      best = best_bipartition_cut(g, limit)
      if cut(g, p) <= 1.5 * best + 1:
        good += 1
    self.assertGreaterEqual(good, 0.9 * trials)

  def test_uneven_targets(self):
    g = random_graph(30, 0.2, 3, connected=True)
    p = bipartition(g, (20, 10), 0.0, seed=1)
    self.assertEqual(p.block_weights.tolist(), [20, 10])

  def test_unreachable_target_is_flagged(self):
    g = build_graph([(0, 1)], node_weights=[3, 1])
    p = bipartition(g, (2, 2), 0.0, seed=1)
    self.assertTrue(p.balance_violated)
    self.assertEqual(sorted(p.block_weights.tolist()), [1, 3])


class RecursiveBipartitionTest(unittest.TestCase):

  def test_local_epsilon(self):
    self.assertEqual(_local_epsilon(1, 10, 10), 0.0)
    self.assertAlmostEqual(_local_epsilon(4, Fraction(2575, 100), 100),
                           1.03 ** 0.5 - 1)
    self.assertAlmostEqual(_local_epsilon(2, Fraction(515, 100), 10), 0.03)
    self.assertEqual(_local_epsilon(3, 3, 9), 0.0)

  def test_fixed_epsilon(self):
    self.assertAlmostEqual(_fixed_epsilon(8, 8, 0.03), 0.03)
    self.assertAlmostEqual(_fixed_epsilon(4, 8, 0.03), 1.03 ** (2 / 3) - 1)
    self.assertAlmostEqual(_fixed_epsilon(2, 8, 0.03), 1.03 ** (1 / 3) - 1)
    self.assertEqual(_fixed_epsilon(1, 8, 0.03), 0.0)
    self.assertEqual(_fixed_epsilon(1, 1, 0.03), 0.0)
    # independent of the subproblem weight, unlike the adaptive split
    self.assertAlmostEqual(_fixed_epsilon(5, 5, 0.1), 0.1)

  def test_fixed_split_on_three_triangles(self):
    g = build_graph(clique_edges([0, 1, 2]) + clique_edges([3, 4, 5])
                    + clique_edges([6, 7, 8]))
    p = recursive_bipartition(g, 3, BalanceSpec(0.0, 3, 9), 1,
                              epsilon_split='fixed')
    self.assertEqual(cut(g, p), 0)
    self.assertEqual(p.block_weights.tolist(), [3, 3, 3])
    with self.assertRaises(ValueError):
      recursive_bipartition(g, 3, BalanceSpec(0.0, 3, 9), 1,
                            epsilon_split='even')

  def test_three_triangles(self):
    g = build_graph(clique_edges([0, 1, 2]) + clique_edges([3, 4, 5])
                    + clique_edges([6, 7, 8]))
    for seed in range(3):
      p = recursive_bipartition(g, 3, BalanceSpec(0.0, 3, 9), seed)
      self.assertEqual(cut(g, p), 0)
      self.assertEqual(p.block_weights.tolist(), [3, 3, 3])
      self.assertFalse(p.balance_violated)

  def test_exact_split_of_unit_weights(self):
    g = random_graph(60, 0.1, 4)
    balance = BalanceSpec(0.03, 5, 60)
    p = recursive_bipartition(g, 5, balance, seed=2)
    self.assertEqual(p.block_weights.tolist(), [12] * 5)
    self.assertFalse(p.balance_violated)
    self.assertEqual(cut(g, p), edge_scan_cut(g, p.assignment))

  def test_single_block_and_more_blocks_than_nodes(self):
    g = random_graph(10, 0.3, 1)
    p = recursive_bipartition(g, 1, BalanceSpec(0.0, 1, 10), seed=1)
    self.assertEqual(p.assignment.tolist(), [0] * 10)
    g = build_graph([(0, 1), (1, 2)])
    p = recursive_bipartition(g, 5, BalanceSpec(0.0, 5, 3), seed=1)
    self.assertEqual(p.k, 5)
    self.assertEqual(p.block_weights.sum(), 3)
    self.assertTrue((p.block_weights <= 1).all())
    with self.assertRaises(ValueError):
      recursive_bipartition(g, 0, BalanceSpec(0.0, 1, 3), seed=1)


if __name__ == '__main__':
  unittest.main()
