"""Threshold sampling: keep the heaviest-scored edges.

The m̂-th largest score ω_t splits the edges into E^< (dropped), E^> (kept)
and the tie class E^= (each kept with probability
p = (m̂ - |E^>|) / |E^=|). With the edge weights as scores this is weighted
threshold sampling; with Forest Fire burn counts it is Forest Fire threshold
sampling.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import collections

from fractions import Fraction

import numpy as np

from utils import random as lprandom
from utils.random import edge_uniforms
from .sparsifier import Sparsifier, SparsifierError

ThresholdSelection = collections.namedtuple(
  'ThresholdSelection', ['threshold', 'below', 'equal', 'above',
                         'keep_probability'])

_PIVOT_SALT = 0x7173


def kth_largest(values, k, seed=1):
  """Quickselect for the k-th largest value (1-based).

  Three-way partitions around a seeded random pivot and recurses into the
  side holding the answer, so the expected work is linear.
  """
  values = np.asarray(values)
  if not 1 <= k <= len(values):
    raise SparsifierError("k=%d outside [1, %d]" % (k, len(values)))
  random_state = lprandom.rng(seed, _PIVOT_SALT)
  while True:
    pivot = values[random_state.randint(len(values))]
    above = values[values > pivot]
    if k <= len(above):
      values = above
      continue
    equal = np.count_nonzero(values == pivot)
    if k <= len(above) + equal:
      return pivot
    k -= len(above) + equal
    values = values[values < pivot]


def weight_threshold_select(values, target, seed=1):
  """Locates the score threshold of the `target` heaviest edges.

  Args:
    values:  Edge weights or scores.
    target:  m̂, in `[1, len(values)]`.
    seed:  Seed of the quickselect pivots.

  Returns:
    A `ThresholdSelection` with ω_t, |E^<|, |E^=|, |E^>| and the exact tie
    keep probability as a `Fraction` in (0, 1].
  """
  values = np.asarray(values)
  if not 1 <= target <= len(values):
    raise SparsifierError("target %d outside [1, %d]" % (target, len(values)))
  threshold = kth_largest(values, target, seed)
  above = int(np.count_nonzero(values > threshold))
  equal = int(np.count_nonzero(values == threshold))
  below = len(values) - above - equal
  return ThresholdSelection(threshold, below, equal, above,
                            Fraction(target - above, equal))


def threshold_sample(g, scores, target, seed, level=0):
  """Keeps edges scoring above ω_t, drops those below, samples the ties.

  Args:
    g:  The `Graph`.
    scores:  One score per undirected edge, in edge-id order.
    target:  m̂.
    seed:  Run seed.
    level:  Hierarchy level, salting the tie sampling.

  Returns:
    The sparsified `Graph`.
  """
  Sparsifier.check_target(g, target)
  scores = np.asarray(scores)
  if len(scores) != g.edge_count:
    raise SparsifierError("got %d scores for %d edges"
                          % (len(scores), g.edge_count))
  if target == 0:
    return g.keep_edges(np.zeros(g.edge_count, dtype=bool))
  if target == g.edge_count:
    return g
  selection = weight_threshold_select(scores, target, lprandom.derive_seed(
    seed, level))
  keep = scores > selection.threshold
  ties = scores == selection.threshold
  if selection.keep_probability >= 1:
    keep |= ties
  else:
    u, v, _ = g.edges()
    keep |= ties & (edge_uniforms(seed, level, u, v)
                    < float(selection.keep_probability))
  return g.keep_edges(keep)


class WeightThresholdSampler(Sparsifier):
  """Threshold sampling on the edge weights."""

  def sample(self, g, target, level=0):
    _, _, weights = g.edges()
    return threshold_sample(g, weights, target, self._cfg.seed, level)
