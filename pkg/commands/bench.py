"""Benchmark sweeps: sparsification methods x generated instances x seeds.

Every run is an independent partitioner call, so a sweep is spread over a
`WorkerPool`. Results are the `algorithm,instance,cut` rows consumed by
`analysis.performance_profile`, plus a summary of geometric-mean cuts and
hierarchy sizes relative to the run without sparsification.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import collections

from logzero import logger

from analysis import relative_summary
from coarsening import SparsifyConfig
from coarsening.sparsifiers import CLI_NAMES
from graphs import GeneratorSpec, generate
from graphs.generators import (CHUNG_LU, ERDOS_RENYI, PATH, PLANTED_PARTITION,
                               STAR)
from partitioning import PartitionerConfig, partition
from utils import WorkerPool

BASELINE = 'none'
SUITE_KINDS = ('er', 'planted', 'chung-lu', 'path', 'star')

BenchResult = collections.namedtuple(
  'BenchResult', ['algorithm', 'instance', 'seed', 'cut', 'feasible',
                  'hierarchy_edges', 'hierarchy_size', 'input_size'])


def instance_suite(node_count, kinds=SUITE_KINDS, seed=1):
  """Generator specs of the benchmark instances of one size.

  Returns:
    An ordered dict `instance id -> GeneratorSpec.to_dict()`.
  """
  suite = collections.OrderedDict()
  for kind in kinds:
    if kind == 'er':
      spec = GeneratorSpec(ERDOS_RENYI, node_count,
                           edge_count=4 * node_count, seed=seed)
    elif kind == 'planted':
      spec = GeneratorSpec(PLANTED_PARTITION, node_count, blocks=4,
                           p_in=min(1.0, 32.0 / node_count),
                           p_out=min(1.0, 0.8 / node_count), seed=seed)
    elif kind == 'chung-lu':
      spec = GeneratorSpec(CHUNG_LU, node_count, avg_degree=8, seed=seed)
    elif kind == 'path':
      spec = GeneratorSpec(PATH, node_count)
    elif kind == 'star':
      spec = GeneratorSpec(STAR, node_count)
    else:
      raise ValueError("unknown benchmark instance kind %r" % (kind,))
    suite["%s-n%d" % (kind, node_count)] = spec.to_dict()
  return suite


def run_job(instance, spec_dict, method, k, epsilon, seed):
  """One partitioner run; module level so worker processes can unpickle it."""
  g = generate(GeneratorSpec(**spec_dict))
  cfg = PartitionerConfig(k, epsilon=epsilon,
                          sparsify=SparsifyConfig(method=method, seed=seed),
                          seed=seed)
  p, stats = partition(g, cfg)
  return BenchResult(method, instance, seed, stats.cut, stats.feasible,
                     stats.hierarchy_edges, stats.hierarchy_size,
                     g.node_count + g.edge_count)


def run_sweep(suite, methods, seeds, k, epsilon=0.03, threads=1):
  """Runs every (instance, method, seed) combination.

  Args:
    suite:  Output of `instance_suite`.
    methods:  Command-line sparsifier names, see `CLI_NAMES`.
    seeds:  Iterable of seeds.
    k:  Number of blocks.
    epsilon:  Allowed imbalance.
    threads:  Worker processes; 1 runs in-process.

  Returns:
    A list of `BenchResult`s in job order.
  """
  for method in methods:
    if method not in CLI_NAMES:
      raise ValueError("unknown sparsifier %r" % (method,))
  jobs = [(instance, spec_dict, method, k, epsilon, seed)
          for instance, spec_dict in suite.items()
          for method in methods for seed in seeds]
  logger.info("bench: %d jobs on %d thread(s)", len(jobs), threads)
  if threads == 1:
    return [run_job(*job) for job in jobs]
  with WorkerPool(threads) as pool:
    return pool.map(run_job, jobs)


def cut_rows(results):
  """`(algorithm, instance, cut)` rows, one instance per (instance, seed)."""
  return [(r.algorithm, "%s-s%d" % (r.instance, r.seed), r.cut)
          for r in results]


def summarize(results):
  """Geometric-mean cuts and hierarchy sizes relative to the baseline.

  Returns:
    A JSON-ready dict with `relative_cut`, `relative_hierarchy_edges`, the
    worst `hierarchy_size / input_size` ratio per algorithm and the number of
    infeasible runs.
  """
  rows = cut_rows(results)
  algorithms = sorted(set(r.algorithm for r in results))
  summary = {'algorithms': algorithms}
  if BASELINE in algorithms:
    summary['relative_cut'] = relative_summary(rows, BASELINE)
    edges = [(r.algorithm, "%s-s%d" % (r.instance, r.seed),
              r.hierarchy_edges) for r in results]
    summary['relative_hierarchy_edges'] = relative_summary(edges, BASELINE)
  work, infeasible = {}, {}
  for a in algorithms:
    runs = [r for r in results if r.algorithm == a]
    ratios = [r.hierarchy_size / r.input_size for r in runs if r.input_size]
    if ratios:
      work[a] = max(ratios)
    infeasible[a] = sum(1 for r in runs if not r.feasible)
  summary['max_work_ratio'] = work
  summary['infeasible'] = infeasible
  return summary
