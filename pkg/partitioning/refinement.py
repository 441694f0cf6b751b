"""Size-constrained label propagation refinement and partition projection."""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import numpy as np

from logzero import logger

from utils import random as lprandom
from .partition import Partition

_ORDER_SALT = 0x7266


def lp_refine(g, p, balance, max_rounds=5, seed=1):
  """Moves nodes to the adjacent block they are most connected to.

  A node moves only if the connection to the target block strictly exceeds
  the connection to its own block, and the target block stays within its
  limit. Among equally good targets the lowest block id wins. Since every
  move strictly reduces the cut, the cut never increases; since no move
  enters a block beyond its limit, the heaviest block never grows past
  max(L_max, its input weight).

  Args:
    g:  The `Graph`.
    p:  A `Partition` of `g`.
    balance:  `BalanceSpec` supplying the per-block limits.
    max_rounds:  Round limit; a round without moves ends early.
    seed:  Seed of the visit order.

  Returns:
    A new `Partition`, flagged as violating balance if it does.
  """
  if p.node_count != g.node_count:
    raise ValueError("partition covers %d nodes, graph has %d"
                     % (p.node_count, g.node_count))
  xadj, adjncy, adjwgt = g.xadj.tolist(), g.adjncy.tolist(), g.adjwgt.tolist()
  node_weights = g.node_weights.tolist()
  labels = p.assignment.tolist()
  block_weights = p.block_weights.tolist()
  limits = balance.int_limits

  order = lprandom.rng(seed, _ORDER_SALT).permutation(g.node_count)
  order = order[g.degrees()[order] > 0].tolist()

  for round_ in range(max_rounds):
    moves = 0
    for u in order:
      current = labels[u]
      rating = {}
      for i in range(xadj[u], xadj[u + 1]):
        b = labels[adjncy[i]]
        rating[b] = rating.get(b, 0) + adjwgt[i]
      weight_u = node_weights[u]
      best, best_rating = current, rating.get(current, 0)
      for b, r in rating.items():
        if b == current or block_weights[b] + weight_u > limits[b]:
          continue
        if r > best_rating or (r == best_rating and best != current
                               and b < best):
          best, best_rating = b, r
      if best != current:
        block_weights[current] -= weight_u
        block_weights[best] += weight_u
        labels[u] = best
        moves += 1
    logger.debug("lp_refine round %d: %d moves", round_ + 1, moves)
    if moves == 0:
      break

  refined = Partition(labels, block_weights, p.k)
  refined.balance_violated = not balance.is_feasible(block_weights)
  return refined


def project(fine_to_coarse, coarse_partition, node_weights=None):
  """Carries a coarse partition over to the finer level.

  Every fine node inherits the block of its coarse node. Because contraction
  only removes intra-cluster edges, the cut is unchanged, and so are the block
  weights.

  Args:
    fine_to_coarse:  Coarse node id of every fine node.
    coarse_partition:  `Partition` of the coarse graph.
    node_weights:  Optional fine node weights; if given, block weights are
      recomputed from them instead of copied.

  Returns:
    The fine `Partition`.

  Raises:
    ValueError:  If a coarse id is out of range.
  """
  fine_to_coarse = np.asarray(fine_to_coarse, dtype=np.int64)
  if len(fine_to_coarse) and (
      fine_to_coarse.min() < 0
      or fine_to_coarse.max() >= coarse_partition.node_count):
    raise ValueError("coarse node id out of range [0, %d)"
                     % coarse_partition.node_count)
  assignment = coarse_partition.assignment[fine_to_coarse]
  if node_weights is not None:
    return Partition.from_assignment(assignment, node_weights,
                                     coarse_partition.k,
                                     coarse_partition.balance_violated)
  return Partition(assignment, coarse_partition.block_weights.copy(),
                   coarse_partition.k, coarse_partition.balance_violated)
