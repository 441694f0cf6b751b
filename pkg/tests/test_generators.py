from __future__ import absolute_import
from __future__ import division

import unittest

import numpy as np

from graphs import (GeneratorError, GeneratorSpec, generate, ground_truth,
                    path_graph, star_graph)
from graphs.generators import (CHUNG_LU, ERDOS_RENYI, PLANTED_PARTITION,
                               bernoulli_indices, decode_pairs)


class PairIndexTest(unittest.TestCase):

  def test_decode_pairs_column_order(self):
    expected = [(u, v) for v in range(1, 40) for u in range(v)]
    u, v = decode_pairs(np.arange(len(expected)))
    self.assertEqual(list(zip(u.tolist(), v.tolist())), expected)

  def test_bernoulli_indices(self):
    random_state = np.random.RandomState(3)
    idx = bernoulli_indices(10000, 0.05, random_state)
    self.assertTrue((np.diff(idx) > 0).all())
    self.assertTrue(0 <= idx.min() and idx.max() < 10000)
    self.assertTrue(300 < len(idx) < 700)
    self.assertEqual(bernoulli_indices(7, 1.0, random_state).tolist(),
                     list(range(7)))
    self.assertEqual(len(bernoulli_indices(7, 0.0, random_state)), 0)


class GenerateTest(unittest.TestCase):

  def test_same_spec_same_graph(self):
    spec = GeneratorSpec(ERDOS_RENYI, 300, p=0.05, seed=4)
    self.assertEqual(generate(spec), generate(spec))
    other = GeneratorSpec(ERDOS_RENYI, 300, p=0.05, seed=5)
    self.assertNotEqual(generate(spec), generate(other))

  def test_erdos_renyi_extremes(self):
    self.assertEqual(generate(GeneratorSpec(ERDOS_RENYI, 5, p=1.0)).edge_count,
                     10)
    self.assertEqual(generate(GeneratorSpec(ERDOS_RENYI, 5, p=0.0)).edge_count,
                     0)

  def test_erdos_renyi_edge_count_target(self):
    g = generate(GeneratorSpec(ERDOS_RENYI, 2000, edge_count=8000, seed=2))
    self.assertLess(abs(g.edge_count - 8000), 600)

  def test_planted_partition(self):
    spec = GeneratorSpec(PLANTED_PARTITION, 8, blocks=2, p_in=1.0, p_out=0.0)
    g = generate(spec)
    self.assertEqual(g.edge_count, 12)
    truth = ground_truth(spec)
    self.assertEqual(truth.tolist(), [0, 1] * 4)
    u, v, _ = g.edges()
    self.assertTrue((truth[u] == truth[v]).all())

  def test_planted_partition_inter_edges(self):
    spec = GeneratorSpec(PLANTED_PARTITION, 400, blocks=4, p_in=0.1,
                         p_out=0.01, seed=7)
    g = generate(spec)
    truth = ground_truth(spec)
    u, v, _ = g.edges()
    inter = int(np.count_nonzero(truth[u] != truth[v]))
    # 60000 inter-block pairs, 19800 intra-block pairs
    self.assertTrue(400 < inter < 800)
    self.assertTrue(1600 < g.edge_count - inter < 2400)

  def test_chung_lu_is_skewed(self):
    g = generate(GeneratorSpec(CHUNG_LU, 2000, avg_degree=8, seed=3))
    g.validate()
    degrees = g.degrees()
    self.assertGreater(degrees[0], 5 * degrees.mean())
    self.assertLess(g.edge_count, 8000 + 400)

  def test_path_and_star(self):
    self.assertEqual(path_graph(5).degrees().tolist(), [1, 2, 2, 2, 1])
    self.assertEqual(path_graph(1).edge_count, 0)
    self.assertEqual(path_graph(0).node_count, 0)
    star = star_graph(4)
    self.assertEqual(star.degrees().tolist(), [4, 1, 1, 1, 1])

  def test_invalid_specs(self):
    bad = [
      dict(kind='lattice', node_count=4),
      dict(kind=ERDOS_RENYI, node_count=4),
      dict(kind=ERDOS_RENYI, node_count=4, p=0.5, edge_count=2),
      dict(kind=ERDOS_RENYI, node_count=4, edge_count=7),
      dict(kind=ERDOS_RENYI, node_count=4, p=1.5),
      dict(kind=PLANTED_PARTITION, node_count=4, blocks=1, p_in=1, p_out=0),
      dict(kind=PLANTED_PARTITION, node_count=4, blocks=2, p_in=1),
      dict(kind=CHUNG_LU, node_count=4, avg_degree=0),
      dict(kind=CHUNG_LU, node_count=4, avg_degree=2, exponent=2),
      dict(kind=ERDOS_RENYI, node_count=1000, p=1.0, max_edges=10),
    ]
    for kwargs in bad:
      with self.assertRaises(GeneratorError, msg=repr(kwargs)):
        GeneratorSpec(**kwargs)
    with self.assertRaises(GeneratorError):
      ground_truth(GeneratorSpec(ERDOS_RENYI, 4, p=0.5))

  def test_to_dict_rebuilds_spec(self):
    spec = GeneratorSpec(PLANTED_PARTITION, 50, blocks=5, p_in=0.3,
                         p_out=0.01, seed=9)
    self.assertEqual(generate(GeneratorSpec(**spec.to_dict())), generate(spec))


if __name__ == '__main__':
  unittest.main()
