# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import collections

import numpy as np

Imbalance = collections.namedtuple(
  'Imbalance', ['max_block_weight', 'ratio', 'feasible'])


def cut(g, p):
  """Total weight of the edges between different blocks of `p`."""
  assignment = np.asarray(p.assignment)
  if len(assignment) != g.node_count:
    raise ValueError("partition covers %d nodes, graph has %d"
                     % (len(assignment), g.node_count))
  crossing = assignment[g.tails()] != assignment[g.adjncy]
  # every undirected edge appears twice
  return int(g.adjwgt[crossing].sum()) // 2


def imbalance(g, p, balance):
  """Heaviest block relative to the perfect weight ceil(c(V)/k).

  Args:
    g:  The `Graph`.
    p:  A `Partition` of `g`.
    balance:  The `BalanceSpec` to check against.

  Returns:
    An `Imbalance` of the heaviest block weight, its ratio to the perfect
    block weight and whether every block meets its limit.
  """
  weights = np.bincount(p.assignment, weights=g.node_weights,
                        minlength=p.k).astype(np.int64)
  heaviest = int(weights.max()) if len(weights) else 0
  perfect = balance.perfect_weight
  ratio = heaviest / perfect if perfect else 0.0
  return Imbalance(heaviest, ratio, balance.is_feasible(weights.tolist()))
