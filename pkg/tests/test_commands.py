from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

import csv
import io
import json
import os
import shutil
import sys
import tempfile
import unittest

import six

from analysis import read_cuts
from commands import bench
from commands.main import EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK, main
from graphs import read_metis, write_metis
from oracles import disjoint_cliques


class CommandTest(unittest.TestCase):

  def setUp(self):
    self.tmp = tempfile.mkdtemp()

  def tearDown(self):
    shutil.rmtree(self.tmp)

  def path(self, name):
    return os.path.join(self.tmp, name)

  def run_main(self, *argv):
    """Runs the command line, returning its exit status and stdout."""
    stdout = sys.stdout
    sys.stdout = six.StringIO()
    try:
      status = main([str(a) for a in argv])
      return status, sys.stdout.getvalue()
    finally:
      sys.stdout = stdout

  def write(self, name, text):
    with io.open(self.path(name), 'w') as fp:
      fp.write(text)
    return self.path(name)

  def read_lines(self, name):
    with io.open(self.path(name)) as fp:
      return fp.read().splitlines()


class PartitionCommandTest(CommandTest):

  def setUp(self):
    super(PartitionCommandTest, self).setUp()
    write_metis(disjoint_cliques(8), self.path('cliques.graph'))

  def test_two_cliques(self):
    status, out = self.run_main(
      'partition', '--graph', self.path('cliques.graph'), '--k', 2,
      '--out', self.path('cliques.part'), '--stats', self.path('stats.json'))
    self.assertEqual(status, EXIT_OK)
    self.assertEqual(out, "cut=0 imbalance=1.0 feasible=true\n")
    blocks = [int(b) for b in self.read_lines('cliques.part')]
    self.assertEqual(len(blocks), 16)
    self.assertEqual(len(set(blocks[:8])), 1)
    self.assertEqual(len(set(blocks[8:])), 1)
    self.assertNotEqual(blocks[0], blocks[8])
    with io.open(self.path('stats.json')) as fp:
      stats = json.load(fp)
    self.assertEqual(stats['cut'], 0)
    self.assertNotIn('timings', stats)

  def test_timings_on_request(self):
    status, _ = self.run_main(
      'partition', '--graph', self.path('cliques.graph'), '--k', 2,
      '--sparsifier', 't-ff', '--stats', self.path('stats.json'), '--timings')
    self.assertEqual(status, EXIT_OK)
    with io.open(self.path('stats.json')) as fp:
      self.assertIn('timings', json.load(fp))

  def test_same_seed_same_output(self):
    outputs = []
    for name in ('a.part', 'b.part'):
      self.run_main('partition', '--graph', self.path('cliques.graph'),
                    '--k', 4, '--seed', 3, '--out', self.path(name))
      outputs.append(self.read_lines(name))
    self.assertEqual(outputs[0], outputs[1])

  def test_infeasible_exit_status(self):
    graph = self.write('heavy.graph', "2 1 010\n3 2\n1 1\n")
    status, out = self.run_main('partition', '--graph', graph, '--k', 2,
                                '--epsilon', 0)
    self.assertEqual(status, EXIT_INFEASIBLE)
    self.assertEqual(out, "cut=1 imbalance=1.5 feasible=false\n")

  def test_malformed_graph(self):
    graph = self.write('bad.graph', "3 5\n2\n1 3\n2\n")
    status, out = self.run_main('partition', '--graph', graph, '--k', 2)
    self.assertEqual(status, EXIT_ERROR)
    self.assertEqual(out, "")

  def test_bad_flags(self):
    for argv in [('partition', '--graph', self.path('missing.graph'), '--k', 2),
                 ('partition', '--graph', self.path('cliques.graph'), '--k', 0),
                 ('partition', '--graph', self.path('cliques.graph'), '--k', 2,
                  '--sparsifier', 'bogus'),
                 ('partition', '--graph', self.path('cliques.graph'), '--k', 2,
                  '--epsilon', -1),
                 ('partition', '--graph', self.path('cliques.graph')),
                 ('frobnicate',)]:
      with self.assertRaises(SystemExit) as context:
        self.run_main(*argv)
      self.assertEqual(context.exception.code, EXIT_ERROR, msg=repr(argv))


class GenCommandTest(CommandTest):

  def test_planted_with_truth(self):
    out = self.path('planted.graph')
    status, _ = self.run_main('gen', '--type', 'planted', '--n', 40,
                              '--blocks', 2, '--p-in', 0.5, '--p-out', 0.01,
                              '--seed', 4, '--out', out)
    self.assertEqual(status, EXIT_OK)
    self.assertEqual(read_metis(out).node_count, 40)
    self.assertEqual(self.read_lines('planted.graph.truth'),
                     ['0', '1'] * 20)

  def test_erdos_renyi(self):
    out = self.path('er.graph')
    self.assertEqual(self.run_main('gen', '--type', 'er', '--n', 10, '--p', 1,
                                   '--out', out)[0], EXIT_OK)
    self.assertEqual(read_metis(out).edge_count, 45)

  def test_missing_parameters(self):
    status, _ = self.run_main('gen', '--type', 'er', '--n', 10,
                              '--out', self.path('er.graph'))
    self.assertEqual(status, EXIT_ERROR)
    self.assertFalse(os.path.exists(self.path('er.graph')))


class AnalyzeCommandTest(CommandTest):

  def setUp(self):
    super(AnalyzeCommandTest, self).setUp()
    self.graph = self.write(
      'triangles.graph', "6 7\n2 3\n1 3\n1 2 4\n3 5 6\n4 6\n4 5\n")
    self.blocks = self.write('triangles.part', "0\n0\n0\n1\n1\n1\n")

  def test_metrics(self):
    status, out = self.run_main('analyze', '--graph', self.graph,
                                '--partition', self.blocks)
    self.assertEqual(status, EXIT_OK)
    doc = json.loads(out)
    self.assertEqual(doc['cut'], 1)
    self.assertEqual(doc['k'], 2)
    self.assertEqual(doc['block_weights'], [3, 3])
    self.assertTrue(doc['feasible'])

  def test_modularity_to_file(self):
    status, _ = self.run_main('analyze', '--graph', self.graph,
                              '--mode', 'modularity',
                              '--clustering', self.blocks,
                              '--out', self.path('report.json'))
    self.assertEqual(status, EXIT_OK)
    with io.open(self.path('report.json')) as fp:
      doc = json.load(fp)
    self.assertAlmostEqual(doc['q_c'], 5 / 14)
    self.assertAlmostEqual(doc['intra_fraction'], 6 / 7)

  def test_reduction(self):
    status, out = self.run_main('analyze', '--graph', self.graph,
                                '--mode', 'reduction',
                                '--max-cluster-weight', 3)
    self.assertEqual(status, EXIT_OK)
    doc = json.loads(out)
    self.assertLessEqual(doc['remaining_edge_fraction'],
                         doc['bound_1_minus_qc'])

  def test_csv_format(self):
    status, out = self.run_main('analyze', '--graph', self.graph,
                                '--partition', self.blocks, '--format', 'csv')
    self.assertEqual(status, EXIT_OK)
    header, row = list(csv.reader(io.StringIO(out)))
    self.assertEqual(header[:2], ['cut', 'k'])
    self.assertEqual(row[:2], ['1', '2'])
    self.assertEqual(row[-1], '3 3')

    status, _ = self.run_main('analyze', '--graph', self.graph,
                              '--mode', 'modularity',
                              '--clustering', self.blocks,
                              '--format', 'csv',
                              '--out', self.path('report.csv'))
    self.assertEqual(status, EXIT_OK)
    header, row = [line.split(',') for line in self.read_lines('report.csv')]
    self.assertEqual(header[0], 'q_c')
    self.assertAlmostEqual(float(row[0]), 5 / 14)

    status, out = self.run_main('analyze', '--graph', self.graph,
                                '--mode', 'reduction',
                                '--max-cluster-weight', 3, '--format', 'csv')
    self.assertEqual(status, EXIT_OK)
    self.assertTrue(out.startswith('remaining_weight_fraction,'))
    self.assertEqual(len(out.splitlines()), 2)
    with self.assertRaises(SystemExit) as context:
      self.run_main('analyze', '--graph', self.graph,
                    '--partition', self.blocks, '--format', 'xml')
    self.assertEqual(context.exception.code, EXIT_ERROR)

  def test_missing_inputs(self):
    self.assertEqual(self.run_main('analyze', '--graph', self.graph)[0],
                     EXIT_ERROR)
    self.assertEqual(self.run_main('analyze', '--graph', self.graph,
                                   '--mode', 'modularity')[0], EXIT_ERROR)
    short = self.write('short.part', "0\n1\n")
    self.assertEqual(self.run_main('analyze', '--graph', self.graph,
                                   '--partition', short)[0], EXIT_ERROR)


class ProfileAndBenchCommandTest(CommandTest):

  def test_profile(self):
    cuts = self.write('cuts.csv', "algorithm,instance,cut\n"
                                  "A,i1,10\nA,i2,20\nB,i1,20\nB,i2,10\n")
    status, out = self.run_main('profile', '--cuts', cuts,
                                '--json', self.path('profile.json'))
    self.assertEqual(status, EXIT_OK)
    self.assertEqual(out.splitlines(), ["algorithm,tau,fraction",
                                        "A,1.0,0.5", "A,2.0,1.0",
                                        "B,1.0,0.5", "B,2.0,1.0"])
    with io.open(self.path('profile.json')) as fp:
      self.assertEqual(json.load(fp)['instances'], ['i1', 'i2'])

  def test_profile_rejects_bad_table(self):
    cuts = self.write('cuts.csv', "algorithm,instance,cut\nA,i1,10\nB,i2,3\n")
    self.assertEqual(self.run_main('profile', '--cuts', cuts)[0], EXIT_ERROR)

  def test_bench(self):
    status, _ = self.run_main(
      'bench', '--n', 64, '--instances', 'path', 'star',
      '--methods', 'none', 't-weight', '--k', 2, '--seeds', 1,
      '--cuts', self.path('cuts.csv'), '--summary', self.path('summary.json'))
    self.assertEqual(status, EXIT_OK)
    rows = read_cuts(self.path('cuts.csv'))
    self.assertEqual(len(rows), 4)
    self.assertEqual(set(r[1] for r in rows),
                     set(['path-n64-s1', 'star-n64-s1']))
    with io.open(self.path('summary.json')) as fp:
      summary = json.load(fp)
    self.assertAlmostEqual(summary['relative_cut']['none'], 1.0)
    self.assertEqual(sorted(summary['infeasible']), ['none', 't-weight'])

  def test_sweep_does_not_depend_on_threads(self):
    suite = bench.instance_suite(48, ('er', 'planted'), seed=2)
    serial = bench.run_sweep(suite, ['none', 'uniform'], [1, 2], 2)
    parallel = bench.run_sweep(suite, ['none', 'uniform'], [1, 2], 2,
                               threads=2)
    self.assertEqual(serial, parallel)
    self.assertEqual(len(serial), 8)


if __name__ == '__main__':
  unittest.main()
