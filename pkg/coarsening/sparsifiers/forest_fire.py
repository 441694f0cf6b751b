"""(Weighted) Forest Fire edge scores.

A fire starts at a random node and spreads breadth-first. At every burning node
u, X ~ Geometric(p) distinct unvisited neighbors are drawn (at most all of
them); each draw burns the connecting edge, adding 1 to its score, and sets
the neighbor on fire. New fires are started while the total number of burned
edges b is at most ν|E|; the fire in progress when b crosses the bound is
finished. The weighted variant draws neighbors with probability proportional
to the connecting edge weight.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import collections

import numpy as np

from logzero import logger

from utils import random as lprandom
from .sparsifier import Sparsifier
from .threshold import threshold_sample

_FIRE_SALT = 0xF1AE


def _draw_order(weights, weighted, random_state):
  """Order in which unvisited neighbors would be drawn, without replacement.

  For weighted draws, sorting by the exponential keys u^(1/w) gives exactly
  successive weight-proportional sampling without replacement.
  """
  if not weighted:
    return random_state.permutation(len(weights))
  keys = random_state.random_sample(len(weights)) ** (1.0 / weights)
  return np.argsort(-keys, kind='stable')


def forest_fire_scores(g, cfg, weighted=False, level=0):
  """Burn count of every undirected edge.

  Args:
    g:  The `Graph`.
    cfg:  `SparsifyConfig`, supplying `ff_p`, `ff_nu` and the seed.
    weighted:  Whether to draw neighbors proportionally to edge weight.
    level:  Hierarchy level, salting the randomness.

  Returns:
    An int64 ndarray of scores in edge-id order; its sum is the final burn
    counter b.
  """
  m = g.edge_count
  scores = np.zeros(m, dtype=np.int64)
  if m == 0:
    return scores
  random_state = lprandom.rng(cfg.seed, _FIRE_SALT, level, int(weighted))
  xadj, adjncy = g.xadj.tolist(), g.adjncy.tolist()
  adjwgt = g.adjwgt.astype(np.float64)
  edge_ids = g.edge_ids.tolist()
  starts = np.flatnonzero(g.degrees() > 0)
  budget = cfg.ff_nu * m
  burned = 0
  fires = 0
  while burned <= budget:
    fires += 1
    start = int(starts[random_state.randint(len(starts))])
    visited = set([start])
    queue = collections.deque([start])
    while queue:
      u = queue.popleft()
      lo, hi = xadj[u], xadj[u + 1]
      candidates = [i for i in range(lo, hi) if adjncy[i] not in visited]
      if not candidates:
        continue
      candidates = np.asarray(candidates, dtype=np.int64)
      order = _draw_order(adjwgt[candidates], weighted, random_state)
      count = min(int(random_state.geometric(cfg.ff_p)), len(candidates))
      for i in candidates[order[:count]].tolist():
        v = adjncy[i]
        visited.add(v)
        queue.append(v)
        scores[edge_ids[i]] += 1
        burned += 1
  logger.debug("forest_fire_scores: %d fires burned %d edges (budget %.1f)",
               fires, burned, budget)
  return scores


class ForestFireSampler(Sparsifier):
  """Threshold sampling on (weighted) Forest Fire burn scores."""

  def __init__(self, cfg, weighted=False):
    """Args:
      cfg:  `SparsifyConfig`.
      weighted:  Use Weighted Forest Fire scores.
    """
    super(ForestFireSampler, self).__init__(cfg)
    self._weighted = weighted

  def sample(self, g, target, level=0):
    Sparsifier.check_target(g, target)
    if target == g.edge_count:
      return g
    scores = forest_fire_scores(g, self._cfg, self._weighted, level)
    return threshold_sample(g, scores, target, self._cfg.seed, level)

  @property
  def weighted(self):
    return self._weighted
