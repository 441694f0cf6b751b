from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

import csv
import io
import unittest

from fractions import Fraction

import numpy as np

from analysis import (cut, edge_reduction_study, geometric_mean,
                      hierarchy_size_ratio, imbalance, modularity_report,
                      performance_profile, read_cuts, reduction_to_dict,
                      relative_summary, write_cuts, write_reduction_csv)
from coarsening import Clustering, ClusteringParams
from graphs import build_graph, path_graph
from oracles import (clique_edges, edge_scan_cut, profile_fraction,
                     random_graph)
from partitioning import BalanceSpec, Partition


def two_triangles():
  return build_graph(clique_edges([0, 1, 2]) + clique_edges([3, 4, 5])
                     + [(2, 3)])


class MetricsTest(unittest.TestCase):

  def test_cut(self):
    g = two_triangles()
    self.assertEqual(cut(g, Partition.from_assignment([0, 0, 0, 1, 1, 1],
                                                      g.node_weights, 2)), 1)
    path = path_graph(4)
    self.assertEqual(cut(path, Partition.from_assignment([0, 1, 0, 1],
                                                         path.node_weights, 2)),
                     3)
    with self.assertRaises(ValueError):
      cut(path, Partition.from_assignment([0, 1], [1, 1], 2))

  def test_cut_matches_edge_scan(self):
    random_state = np.random.RandomState(1)
    for seed in range(5):
      g = random_graph(40, 0.2, seed, max_weight=7)
      assignment = random_state.randint(5, size=40)
      p = Partition.from_assignment(assignment, g.node_weights, 5)
      self.assertEqual(cut(g, p), edge_scan_cut(g, assignment))

  def test_imbalance(self):
    g = two_triangles()
    balance = BalanceSpec(0.03, 2, 6)
    report = imbalance(g, Partition.from_assignment([0, 0, 0, 0, 1, 1],
                                                    g.node_weights, 2),
                       balance)
    self.assertEqual(report.max_block_weight, 4)
    self.assertAlmostEqual(report.ratio, 4 / 3)
    self.assertFalse(report.feasible)
    report = imbalance(g, Partition.from_assignment([0, 0, 0, 1, 1, 1],
                                                    g.node_weights, 2),
                       balance)
    self.assertEqual(report.ratio, 1.0)
    self.assertTrue(report.feasible)


class ModularityTest(unittest.TestCase):

  def test_two_triangles(self):
    g = two_triangles()
    report = modularity_report(
      g, Clustering.from_labels([0, 0, 0, 1, 1, 1], g.node_weights))
    self.assertEqual(report.intra_fraction, Fraction(6, 7))
    self.assertEqual(report.inter_fraction, Fraction(1, 7))
    self.assertEqual(report.q_c, Fraction(5, 14))
    self.assertEqual(report.alpha_c, Fraction(1, 2))
    self.assertEqual(report.parallel_fraction, 0)
    self.assertEqual(report.coarse_edge_fraction, Fraction(1, 7))
    self.assertEqual(report.edge_lower_bound, Fraction(1, 7))
    self.assertTrue(report.sandwich_holds())
    self.assertEqual(report.to_dict()['q_c'], 5 / 14)

  def test_csv(self):
    g = two_triangles()
    out = io.StringIO()
    modularity_report(
      g, Clustering.from_labels([0, 0, 0, 1, 1, 1], g.node_weights)
    ).write_csv(out)
    header, row = list(csv.reader(io.StringIO(out.getvalue())))
    self.assertEqual(header, ['q_c', 'alpha_c', 'intra_fraction',
                              'inter_fraction', 'parallel_fraction',
                              'coarse_edge_fraction', 'edge_lower_bound',
                              'weighted'])
    self.assertAlmostEqual(float(row[0]), 5 / 14)
    self.assertAlmostEqual(float(row[2]), 6 / 7)
    self.assertEqual(row[-1], 'False')

  def test_parallel_edges(self):
    g = build_graph(clique_edges(range(4)))
    report = modularity_report(
      g, Clustering.from_labels([0, 0, 1, 1], g.node_weights))
    self.assertEqual(report.parallel_fraction, Fraction(1, 2))
    self.assertEqual(report.coarse_edge_fraction, Fraction(1, 6))

  def test_weighted(self):
    g = build_graph([(0, 1, 3), (1, 2, 1)])
    c = Clustering.from_labels([0, 0, 1], g.node_weights)
    self.assertEqual(modularity_report(g, c, weighted=True).intra_fraction,
                     Fraction(3, 4))
    self.assertEqual(modularity_report(g, c).intra_fraction, Fraction(1, 2))

  def test_bounds_on_random_clusterings(self):
    random_state = np.random.RandomState(2)
    for seed in range(10):
      g = random_graph(50, 0.15, seed, max_weight=3)
      c = Clustering.from_labels(random_state.randint(8, size=50),
                                 g.node_weights)
      for weighted in (False, True):
        report = modularity_report(g, c, weighted=weighted)
        self.assertTrue(report.sandwich_holds())
      report = modularity_report(g, c)
      self.assertGreaterEqual(report.coarse_edge_fraction,
                              report.edge_lower_bound)
      self.assertLessEqual(report.coarse_edge_fraction, 1 - report.q_c)

  def test_sandwich_over_many_trials(self):
    random_state = np.random.RandomState(5)
    for trial in range(500):
      n = int(random_state.randint(6, 40))
      g = random_graph(n, 0.2, trial, max_weight=4, connected=True)
      c = Clustering.from_labels(
        random_state.randint(1 + n // 3, size=n), g.node_weights)
      report = modularity_report(g, c, weighted=bool(trial % 2))
      self.assertTrue(report.q_c <= report.intra_fraction
                      <= report.q_c + report.alpha_c, msg="trial=%d" % trial)

  def test_edgeless(self):
    g = build_graph([], node_count=3)
    with self.assertRaises(ValueError):
      modularity_report(g, Clustering.singletons(g))


class EdgeReductionTest(unittest.TestCase):

  def test_explicit_clustering(self):
    g = path_graph(6)
    record = edge_reduction_study(
      g, ClusteringParams(3),
      Clustering.from_labels([0, 0, 0, 1, 1, 1], g.node_weights))
    self.assertEqual(record.remaining_edge_fraction, Fraction(1, 5))
    self.assertEqual(record.remaining_weight_fraction, Fraction(1, 5))
    self.assertEqual(record.q_c, Fraction(3, 10))
    self.assertEqual(record.bound_1_minus_qc, Fraction(7, 10))
    self.assertEqual(record.cluster_count, 2)
    doc = reduction_to_dict(record)
    self.assertEqual(doc['cluster_count'], 2)
    self.assertEqual(doc['q_c'], 0.3)

    out = io.StringIO()
    write_reduction_csv(record, out)
    self.assertEqual(out.getvalue().splitlines(), [
      'remaining_weight_fraction,remaining_edge_fraction,q_c,'
      'bound_1_minus_qc,cluster_count',
      '0.2,0.2,0.3,0.7,2'])

  def test_coarsening_clustering_respects_the_bound(self):
    for seed in range(5):
      g = random_graph(120, 0.05, seed, max_weight=2)
      record = edge_reduction_study(g, ClusteringParams(6, seed=seed))
      self.assertLessEqual(record.remaining_edge_fraction,
                           record.bound_1_minus_qc)
      self.assertLess(record.cluster_count, 120)


class ProfileTest(unittest.TestCase):

  ROWS = [('A', 'i1', 10), ('A', 'i2', 20), ('B', 'i1', 20), ('B', 'i2', 10)]

  def test_two_by_two(self):
    table = performance_profile(self.ROWS)
    self.assertEqual(table.algorithms, ['A', 'B'])
    self.assertEqual(table.curves['A'], [(1, Fraction(1, 2)), (2, 1)])
    for algorithm in 'AB':
      for tau in (1, Fraction(3, 2), 2, 3):
        self.assertEqual(table.fraction_at(algorithm, tau),
                         profile_fraction(self.ROWS, algorithm, tau))
    self.assertEqual(table.fraction_at('A', Fraction(1, 2)), 0)

  def test_zero_cuts(self):
    rows = self.ROWS + [('A', 'i3', 0), ('B', 'i3', 5),
                        ('A', 'i4', 0), ('B', 'i4', 0)]
    table = performance_profile(rows)
    self.assertEqual(table.excluded, ['i3'])
    self.assertEqual(table.instances, ['i1', 'i2', 'i4'])
    for algorithm in 'AB':
      for tau in (1, 2):
        self.assertEqual(table.fraction_at(algorithm, tau),
                         profile_fraction(rows, algorithm, tau))
    with self.assertRaises(ValueError):
      performance_profile([('A', 'i1', 0), ('B', 'i1', 3)])

  def test_bad_tables(self):
    with self.assertRaises(ValueError):
      performance_profile([])
    with self.assertRaises(ValueError):
      performance_profile(self.ROWS + [('A', 'i1', 3)])
    with self.assertRaises(ValueError):
      performance_profile(self.ROWS[:-1])
    with self.assertRaises(ValueError):
      performance_profile([('A', 'i1', -1)])

  def test_random_table_matches_definition(self):
    random_state = np.random.RandomState(3)
    rows = [(a, 'i%d' % i, int(random_state.randint(1, 20)))
            for a in ('x', 'y', 'z') for i in range(15)]
    table = performance_profile(rows)
    for a in ('x', 'y', 'z'):
      for tau, fraction in table.curves[a]:
        self.assertEqual(fraction, profile_fraction(rows, a, tau))
      self.assertEqual(table.curves[a][-1][1], 1)

  def test_csv(self):
    out = io.StringIO()
    write_cuts(self.ROWS, out)
    self.assertTrue(out.getvalue().startswith("algorithm,instance,cut\n"))
    self.assertEqual(read_cuts(io.StringIO(out.getvalue())), self.ROWS)
    with self.assertRaises(ValueError):
      read_cuts(io.StringIO("a,b,c\nA,i1,3\n"))
    with self.assertRaises(ValueError):
      read_cuts(io.StringIO("algorithm,instance,cut\nA,i1\n"))

    profile = io.StringIO()
    performance_profile(self.ROWS).write_csv(profile)
    lines = profile.getvalue().splitlines()
    self.assertEqual(lines[0], "algorithm,tau,fraction")
    self.assertEqual(lines[1], "A,1.0,0.5")

  def test_summaries(self):
    self.assertAlmostEqual(geometric_mean([1, 4]), 2.0)
    with self.assertRaises(ValueError):
      geometric_mean([1, 0])
    summary = relative_summary(self.ROWS + [('A', 'i3', 0), ('B', 'i3', 0),
                                            ('A', 'i4', 0), ('B', 'i4', 7)],
                               'B')
    self.assertAlmostEqual(summary['B'], 1.0)
    # ratios 1/2, 2 and 1 for both zero; i4 is skipped
    self.assertAlmostEqual(summary['A'], 1.0)
    summary = relative_summary([('A', 'i1', 4), ('B', 'i1', 2)], 'B')
    self.assertAlmostEqual(summary['A'], 2.0)
    with self.assertRaises(ValueError):
      relative_summary(self.ROWS, 'C')
    self.assertEqual(hierarchy_size_ratio({'hierarchy_edges': 30},
                                          {'hierarchy_edges': 60}), 0.5)
    self.assertEqual(hierarchy_size_ratio({'hierarchy_edges': 0},
                                          {'hierarchy_edges': 0}), 1.0)


if __name__ == '__main__':
  unittest.main()
