# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import math

from fractions import Fraction

import numpy as np

from utils import ceil_div


class Partition(object):
  """A node to block assignment for `k` blocks.

  Attributes:
    assignment:  int64 ndarray, block of every node, in `[0, k)`.
    block_weights:  int64 ndarray of length `k`.
    k:  Number of blocks.
    balance_violated:  Set by the partitioners when they could not meet the
      balance constraint; the partition is still complete.
  """

  def __init__(self, assignment, block_weights, k, balance_violated=False):
    self.assignment = np.asarray(assignment, dtype=np.int64)
    self.block_weights = np.asarray(block_weights, dtype=np.int64)
    self.k = k
    self.balance_violated = balance_violated
    if len(self.block_weights) != k:
      raise ValueError("got %d block weights for k=%d"
                       % (len(self.block_weights), k))

  @classmethod
  def from_assignment(cls, assignment, node_weights, k,
                      balance_violated=False):
    """Builds a `Partition`, computing block weights from `node_weights`."""
    assignment = np.asarray(assignment, dtype=np.int64)
    if len(assignment) and (assignment.min() < 0 or assignment.max() >= k):
      raise ValueError("block id out of range [0, %d)" % k)
    weights = np.bincount(assignment, weights=node_weights, minlength=k)
    return cls(assignment, weights.astype(np.int64), k, balance_violated)

  @property
  def node_count(self):
    return len(self.assignment)

  def copy(self):
    return Partition(self.assignment.copy(), self.block_weights.copy(), self.k,
                     self.balance_violated)

  def __repr__(self):
    return "Partition(n=%d, k=%d, weights=%s)" % (
      self.node_count, self.k, self.block_weights.tolist())


class BalanceSpec(object):
  """The balance constraint c(V_i) <= (1 + eps) * target_i.

  With the default uniform targets ceil(c(V)/k), every block shares the limit
  L_max = (1 + eps) * ceil(c(V)/k). Recursive bipartitioning uses explicit
  per-block targets instead.
  """

  def __init__(self, epsilon, k, total_weight, block_targets=None):
    """Args:
      epsilon:  Allowed relative overload, >= 0.
      k:  Number of blocks.
      total_weight:  c(V).
      block_targets:  Optional list of `k` target weights. Defaults to
        `ceil(total_weight / k)` for every block.
    """
    if epsilon < 0:
      raise ValueError("epsilon must be >= 0, got %r" % (epsilon,))
    if k < 1:
      raise ValueError("k must be >= 1, got %r" % (k,))
    self.epsilon = epsilon
    self.k = k
    self.total_weight = total_weight
    self.perfect_weight = ceil_div(total_weight, k)
    if block_targets is None:
      block_targets = [self.perfect_weight] * k
    if len(block_targets) != k:
      raise ValueError("got %d block targets for k=%d"
                       % (len(block_targets), k))
    self.block_targets = [Fraction(t) for t in block_targets]
    factor = 1 + Fraction(str(epsilon))
    self.limits = [factor * t for t in self.block_targets]
    # weights are integral, so the floor of a limit is just as tight
    self.int_limits = [int(math.floor(l)) for l in self.limits]

  @classmethod
  def from_targets(cls, block_targets, epsilon):
    total = sum(Fraction(t) for t in block_targets)
    return cls(epsilon, len(block_targets), int(math.ceil(total)),
               block_targets)

  @property
  def max_block_weight(self):
    """L_max, the largest block limit."""
    return max(self.limits)

  def is_feasible(self, block_weights):
    return all(w <= l for w, l in zip(block_weights, self.int_limits))

  def overload(self, block_weights):
    """max_i c(V_i) / target_i."""
    ratios = []
    for w, t in zip(block_weights, self.block_targets):
      if t:
        ratios.append(float(Fraction(int(w)) / t))
      else:
        ratios.append(float('inf') if w else 0.0)
    return max(ratios)

  def to_dict(self):
    return {
      'epsilon': self.epsilon,
      'k': self.k,
      'total_weight': self.total_weight,
      'max_block_weight': float(self.max_block_weight),
    }
