"""The multilevel driver: coarsen with sparsification, partition, uncoarsen.

`build_hierarchy` repeatedly clusters and contracts the graph. Whenever a
contracted graph keeps far more edges than the level's edge budget, it is
sparsified before it becomes the next level. `partition` then splits the
coarsest graph by recursive bipartitioning and walks back up the hierarchy,
projecting the partition onto every finer level and refining it there.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import collections
import json

from timeit import default_timer

from logzero import logger

from analysis.metrics import cut, imbalance
from coarsening import (ClusteringParams, SparsifyConfig, coarsening_clustering,
                        contract, should_sparsify, sparsify, target_edge_count)
from coarsening.sparsifiers import NONE
from utils import random as lprandom
from .initial import EPSILON_SPLITS, recursive_bipartition
from .partition import BalanceSpec
from .refinement import lp_refine, project

_CLUSTER_SALT = 0x636C
_INITIAL_SALT = 0x6970
_REFINE_SALT = 0x7266

PHASES = ('coarsening', 'sparsification', 'initial', 'refinement')


class PartitionerConfig(object):
  """All tunables of one partitioner run.

  Attributes:
    k:  Number of blocks.
    epsilon:  Allowed imbalance.
    sparsify:  `SparsifyConfig`; defaults to threshold weight sampling seeded
      with `seed`.
    clustering:  `ClusteringParams` template. Its weight limit and seed are
      replaced per level; rounds and shrink cap are used as given.
    coarsening_target_factor:  Coarsening stops at `factor * k` nodes; the
      cluster weight limit is U = c(V) / (factor * k).
    coarsest_stop_factor:  Above `factor * k` nodes every coarsening step is
      guaranteed to shrink the graph geometrically.
    min_shrink:  Coarsening stops once a step shrinks the node count by less
      than this factor.
    refine_rounds:  Label propagation rounds per level.
    bipartition_attempts:  Growing attempts per bipartition.
    epsilon_split:  `'adaptive'` or `'fixed'`; see `recursive_bipartition`.
    seed:  Run seed.
  """

  def __init__(self, k, epsilon=0.03, sparsify=None, clustering=None,
               coarsening_target_factor=160, coarsest_stop_factor=320,
               min_shrink=1.05, refine_rounds=5, bipartition_attempts=4,
               epsilon_split='adaptive', seed=1):
    self.k = k
    self.epsilon = epsilon
    self.sparsify = sparsify if sparsify is not None else SparsifyConfig(
      seed=seed)
    self.clustering = clustering if clustering is not None else (
      ClusteringParams(1))
    self.coarsening_target_factor = coarsening_target_factor
    self.coarsest_stop_factor = coarsest_stop_factor
    self.min_shrink = min_shrink
    self.refine_rounds = refine_rounds
    self.bipartition_attempts = bipartition_attempts
    self.epsilon_split = epsilon_split
    self.seed = seed
    self.validate()

  def validate(self):
    if self.k < 1:
      raise ValueError("k must be >= 1, got %r" % (self.k,))
    if self.epsilon < 0:
      raise ValueError("epsilon must be >= 0, got %r" % (self.epsilon,))
    if self.coarsening_target_factor < 1:
      raise ValueError("coarsening_target_factor must be >= 1")
    if self.coarsest_stop_factor < self.coarsening_target_factor:
      raise ValueError("coarsest_stop_factor must be >= "
                       "coarsening_target_factor")
    if self.min_shrink < 1:
      raise ValueError("min_shrink must be >= 1, got %r" % (self.min_shrink,))
    if self.refine_rounds < 0:
      raise ValueError("refine_rounds must be >= 0")
    if self.bipartition_attempts < 1:
      raise ValueError("bipartition_attempts must be >= 1")
    if self.epsilon_split not in EPSILON_SPLITS:
      raise ValueError("epsilon_split must be one of %s, got %r"
                       % (EPSILON_SPLITS, self.epsilon_split))
    self.sparsify.validate()
    self.clustering.validate()

  def max_cluster_weight(self, total_node_weight):
    """U = c(V) / (coarsening_target_factor * k), at least 1."""
    return max(1, total_node_weight // (self.coarsening_target_factor * self.k))

  def to_dict(self):
    clustering = self.clustering.to_dict()
    del clustering['max_cluster_weight'], clustering['seed']
    return {
      'k': self.k,
      'epsilon': self.epsilon,
      'sparsify': self.sparsify.to_dict(),
      'clustering': clustering,
      'coarsening_target_factor': self.coarsening_target_factor,
      'coarsest_stop_factor': self.coarsest_stop_factor,
      'min_shrink': self.min_shrink,
      'refine_rounds': self.refine_rounds,
      'bipartition_attempts': self.bipartition_attempts,
      'epsilon_split': self.epsilon_split,
      'seed': self.seed,
    }


Level = collections.namedtuple(
  'Level', ['graph', 'fine_to_coarse', 'sparsified', 'pre_sparsify_edge_count',
            'target_edge_count'])


class Hierarchy(object):
  """The graphs G_1 (the input), G_2, ..., G_l of one coarsening run.

  Attributes:
    levels:  List of `Level`s. `levels[0].graph` is the input and has no
      `fine_to_coarse`; for i > 0, `levels[i].fine_to_coarse` maps the nodes
      of level i-1 to those of level i.
    timings:  Seconds spent per phase.
  """

  def __init__(self, levels, timings=None):
    self.levels = levels
    self.timings = timings if timings is not None else {}

  @property
  def level_count(self):
    return len(self.levels)

  @property
  def coarsest(self):
    return self.levels[-1].graph

  def total_edges(self):
    """Sum of m_i over all levels."""
    return sum(level.graph.edge_count for level in self.levels)

  def total_size(self):
    """Sum of n_i + m_i over all levels."""
    return sum(level.graph.node_count + level.graph.edge_count
               for level in self.levels)

  def level_stats(self):
    return [{
      'n': level.graph.node_count,
      'm': level.graph.edge_count,
      'sparsified': level.sparsified,
      'pre_sparsify_m': level.pre_sparsify_edge_count,
      'target_m': level.target_edge_count,
    } for level in self.levels]


def build_hierarchy(g, cfg):
  """Coarsens `g` until it is small enough or stops shrinking.

  While the current graph has more than `coarsening_target_factor * k` nodes
  and the last step shrank it by at least `min_shrink`, the graph is
  clustered with the weight limit U (computed once from the input), then
  contracted. If the contracted graph has more than rho times its edge budget
  m̂, it is sparsified down to m̂ before it is appended.

  Args:
    g:  The input `Graph`.
    cfg:  `PartitionerConfig`.

  Returns:
    A `Hierarchy`.
  """
  stop = cfg.coarsening_target_factor * cfg.k
  guaranteed = cfg.coarsest_stop_factor * cfg.k
  limit = cfg.max_cluster_weight(g.total_node_weight)
  levels = [Level(g, None, False, g.edge_count, None)]
  timings = dict.fromkeys(PHASES[:2], 0.0)
  current = g
  shrink = float('inf')
  while current.node_count > stop and shrink >= cfg.min_shrink:
    index = len(levels)
    start = default_timer()
    params = cfg.clustering.with_weight(
      limit, seed=lprandom.derive_seed(cfg.seed, _CLUSTER_SALT, index))
    coarse, fine_to_coarse = contract(current,
                                      coarsening_clustering(current, params))
    timings['coarsening'] += default_timer() - start

    start = default_timer()
    target = target_edge_count(current.edge_count, current.node_count,
                               coarse.node_count, cfg.sparsify)
    pre_sparsify = coarse.edge_count
    sparsified = (cfg.sparsify.method != NONE
                  and should_sparsify(pre_sparsify, target, cfg.sparsify))
    if sparsified:
      coarse = sparsify(coarse, target, cfg.sparsify, level=index)
    timings['sparsification'] += default_timer() - start

    shrink = current.node_count / max(1, coarse.node_count)
    logger.debug("level %d: n=%d m=%d (contracted m=%d, target %d%s)", index,
                 coarse.node_count, coarse.edge_count, pre_sparsify, target,
                 ", sparsified" if sparsified else "")
    if shrink < cfg.min_shrink and current.node_count > guaranteed:
      logger.warning("coarsening stalled at %d nodes (shrink %.3f)",
                     current.node_count, shrink)
    levels.append(Level(coarse, fine_to_coarse, sparsified, pre_sparsify,
                        target))
    current = coarse
  logger.info("hierarchy: %d levels, coarsest n=%d m=%d", len(levels),
              current.node_count, current.edge_count)
  return Hierarchy(levels, timings)


class RunStats(object):
  """Statistics of one `partition` run, serializable as JSON."""

  def __init__(self, config, levels, uncoarsening, cut, imbalance, feasible,
               max_block_weight, hierarchy_edges, hierarchy_size,
               timings=None):
    self.config = config
    self.levels = levels
    self.uncoarsening = uncoarsening
    self.cut = cut
    self.imbalance = imbalance
    self.feasible = feasible
    self.max_block_weight = max_block_weight
    self.hierarchy_edges = hierarchy_edges
    self.hierarchy_size = hierarchy_size
    self.timings = timings if timings is not None else {}

  @property
  def balance_violated(self):
    return not self.feasible

  def to_dict(self, include_timings=False):
    """The JSON document; timings only on request so runs compare equal."""
    doc = {
      'config': self.config,
      'levels': self.levels,
      'uncoarsening': self.uncoarsening,
      'cut': self.cut,
      'imbalance': self.imbalance,
      'feasible': self.feasible,
      'balance_violated': self.balance_violated,
      'max_block_weight': self.max_block_weight,
      'hierarchy_edges': self.hierarchy_edges,
      'hierarchy_size': self.hierarchy_size,
    }
    if include_timings:
      doc['timings'] = self.timings
    return doc

  def to_json(self, include_timings=False):
    return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True)

  @classmethod
  def from_dict(cls, doc):
    return cls(doc['config'], doc['levels'], doc['uncoarsening'], doc['cut'],
               doc['imbalance'], doc['feasible'], doc['max_block_weight'],
               doc['hierarchy_edges'], doc['hierarchy_size'],
               doc.get('timings'))


def partition(g, cfg):
  """Partitions `g` into `cfg.k` blocks.

  Args:
    g:  The input `Graph`.
    cfg:  `PartitionerConfig`.

  Returns:
    `(partition, stats)`: the `Partition` of `g`, flagged if it violates the
    balance constraint, and the `RunStats` of the run.
  """
  cfg.validate()
  hierarchy = build_hierarchy(g, cfg)
  balance = BalanceSpec(cfg.epsilon, cfg.k, g.total_node_weight)
  timings = dict(hierarchy.timings)

  start = default_timer()
  p = recursive_bipartition(hierarchy.coarsest, cfg.k, balance,
                            lprandom.derive_seed(cfg.seed, _INITIAL_SALT),
                            attempts=cfg.bipartition_attempts,
                            refine_rounds=cfg.refine_rounds,
                            epsilon_split=cfg.epsilon_split)
  timings['initial'] = default_timer() - start
  logger.info("initial partition: cut=%d", cut(hierarchy.coarsest, p))

  start = default_timer()
  uncoarsening = []
  for index in reversed(range(hierarchy.level_count)):
    level = hierarchy.levels[index]
    if index < hierarchy.level_count - 1:
      p = project(hierarchy.levels[index + 1].fine_to_coarse, p)
    projected = cut(level.graph, p)
    p = lp_refine(level.graph, p, balance, max_rounds=cfg.refine_rounds,
                  seed=lprandom.derive_seed(cfg.seed, _REFINE_SALT, index))
    refined = cut(level.graph, p)
    logger.debug("level %d: projected cut %d, refined cut %d", index,
                 projected, refined)
    uncoarsening.append({
      'level': index,
      'projected_cut': projected,
      'refined_cut': refined,
    })
  timings['refinement'] = default_timer() - start

  report = imbalance(g, p, balance)
  p.balance_violated = not report.feasible
  final_cut = uncoarsening[-1]['refined_cut']
  if p.balance_violated:
    logger.warning("partition violates balance: heaviest block %d > %.2f",
                   report.max_block_weight, float(balance.max_block_weight))
  logger.info("partition: k=%d cut=%d imbalance=%.4f", cfg.k, final_cut,
              report.ratio)
  stats = RunStats(cfg.to_dict(), hierarchy.level_stats(), uncoarsening,
                   final_cut, report.ratio, report.feasible,
                   report.max_block_weight, hierarchy.total_edges(),
                   hierarchy.total_size(), timings)
  return p, stats
