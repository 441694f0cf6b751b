"""Initial partitioning of the coarsest graph by recursive bipartitioning.

Each bipartition grows block 0 greedily from a seeded start node, always
absorbing the frontier node with the best gain (connection into the block
minus connection to the rest), then smooths the result with label
propagation refinement. The best of a few seeded attempts is kept.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import heapq

from fractions import Fraction

import numpy as np

from logzero import logger

from analysis.metrics import cut
from utils import random as lprandom
from .partition import BalanceSpec, Partition
from .refinement import lp_refine

_GROW_SALT = 0x6767

EPSILON_SPLITS = ('adaptive', 'fixed')


def _grow(g, target, limit, random_state):
  """Greedy graph growing of block 0.

  Returns a boolean ndarray marking the nodes of block 0.
  """
  n = g.node_count
  xadj, adjncy, adjwgt = g.xadj.tolist(), g.adjncy.tolist(), g.adjwgt.tolist()
  node_weights = g.node_weights.tolist()
  weighted_degrees = g.weighted_degrees().tolist()
  order = random_state.permutation(n).tolist()
  rank = [0] * n
  for position, u in enumerate(order):
    rank[u] = position

  in_block = [False] * n
  inner = [0] * n
  heap = []
  weight = 0
  next_seed = 0
  while weight < target:
    u = None
    while heap:
      neg_gain, _, x = heapq.heappop(heap)
      if in_block[x] or -neg_gain != 2 * inner[x] - weighted_degrees[x]:
        continue
      if weight + node_weights[x] <= limit:
        u = x
        break
    while u is None and next_seed < n:
      x = order[next_seed]
      next_seed += 1
      if not in_block[x] and weight + node_weights[x] <= limit:
        u = x
    if u is None:
      break
    in_block[u] = True
    weight += node_weights[u]
    for i in range(xadj[u], xadj[u + 1]):
      x = adjncy[i]
      if in_block[x]:
        continue
      inner[x] += adjwgt[i]
      heapq.heappush(heap, (-(2 * inner[x] - weighted_degrees[x]), rank[x], x))
  return np.asarray(in_block, dtype=bool)


def bipartition(g, weight_targets, eps_local, seed, attempts=4,
                refine_rounds=5):
  """Splits `g` into two blocks of roughly the given weights.

  Args:
    g:  The `Graph`.
    weight_targets:  `(w_left, w_right)`, summing to the total node weight.
    eps_local:  Allowed relative overload of each side.
    seed:  Seed of start nodes and refinement orders.
    attempts:  Number of seeded growing attempts.
    refine_rounds:  Label propagation rounds after each growing.

  Returns:
    The best `Partition` with `k=2`, ranked by (balance violated, cut,
    imbalance). Its `balance_violated` flag is set if no attempt met both
    limits.
  """
  balance = BalanceSpec.from_targets(weight_targets, eps_local)
  target_left = balance.block_targets[0]
  limit_left = balance.int_limits[0]
  best, best_key = None, None
  for attempt in range(attempts):
    random_state = lprandom.rng(seed, _GROW_SALT, attempt)
    in_left = _grow(g, target_left, limit_left, random_state)
    p = Partition.from_assignment(np.where(in_left, 0, 1), g.node_weights, 2)
    p = lp_refine(g, p, balance, max_rounds=refine_rounds,
                  seed=lprandom.derive_seed(seed, attempt))
    key = (p.balance_violated, cut(g, p), balance.overload(p.block_weights))
    logger.debug("bipartition attempt %d: violated=%s cut=%d imbalance=%.4f",
                 attempt, *key)
    if best is None or key < best_key:
      best, best_key = p, key
  if best.balance_violated:
    logger.warning("bipartition: no attempt met targets %s (weights %s)",
                   [float(t) for t in balance.block_targets],
                   best.block_weights.tolist())
  return best


def _local_epsilon(k, max_block_weight, total_weight):
  """Share of the imbalance budget spent on one bipartition level.

  Spreads the budget so that the product of (1 + eps) over the remaining
  ceil(log2 k) levels stays within `max_block_weight` for every leaf block.
  This is the default and differs from the fixed split
  (1 + eps)^(ceil(log2 k')/ceil(log2 k)) - 1 of `_fixed_epsilon`: it depends on
  the subproblem weight, so a side that came out light gets a larger eps.
  """
  depth = (k - 1).bit_length()
  if total_weight <= 0 or depth <= 0:
    return 0.0
  budget = float(Fraction(k) * max_block_weight / total_weight)
  return max(0.0, budget ** (1.0 / depth) - 1.0)


def _fixed_epsilon(k_sub, k, epsilon):
  """(1 + eps)^(ceil(log2 k_sub) / ceil(log2 k)) - 1, independent of weights."""
  depth = (k - 1).bit_length()
  if depth <= 0:
    return 0.0
  return (1.0 + epsilon) ** ((k_sub - 1).bit_length() / depth) - 1.0


def recursive_bipartition(g, k, balance, seed, attempts=4, refine_rounds=5,
                          epsilon_split='adaptive'):
  """Partitions `g` into `k` blocks by recursive bipartitioning.

  A subproblem with k' > 1 blocks is split into ceil(k'/2) and floor(k'/2)
  blocks with weight targets proportional to those counts; both sides are
  extracted as subgraphs and partitioned recursively with seeds derived from
  the side. Block ids are assigned left to right, so they are exactly
  `[0, k)`.

  Args:
    g:  The `Graph`, usually the coarsest of a hierarchy.
    k:  Number of blocks, >= 1.
    balance:  `BalanceSpec` of the final partition.
    seed:  Run seed.
    attempts:  Growing attempts per bipartition.
    refine_rounds:  Label propagation rounds per bipartition.
    epsilon_split:  How the imbalance budget is spread over the levels.
      `'adaptive'` uses `_local_epsilon`, `'fixed'` uses `_fixed_epsilon`.

  Returns:
    A `Partition`, flagged if it violates `balance`.
  """
  if k < 1:
    raise ValueError("k must be >= 1, got %r" % (k,))
  if epsilon_split not in EPSILON_SPLITS:
    raise ValueError("epsilon_split must be one of %s, got %r"
                     % (EPSILON_SPLITS, epsilon_split))
  assignment = np.zeros(g.node_count, dtype=np.int64)
  max_block_weight = balance.max_block_weight

  def recurse(sub, ids, k_sub, offset, sub_seed):
    if k_sub == 1 or sub.node_count == 0:
      assignment[ids] = offset
      return
    k_left = (k_sub + 1) // 2
    total = sub.total_node_weight
    target_left = Fraction(total * k_left, k_sub)
    if epsilon_split == 'fixed':
      eps_local = _fixed_epsilon(k_sub, k, balance.epsilon)
    else:
      eps_local = _local_epsilon(k_sub, max_block_weight, total)
    p = bipartition(sub, (target_left, total - target_left), eps_local,
                    sub_seed, attempts, refine_rounds)
    for side, (k_side, side_offset) in enumerate(
        [(k_left, offset), (k_sub - k_left, offset + k_left)]):
      part, part_ids = sub.induced_subgraph(p.assignment == side)
      recurse(part, ids[part_ids], k_side, side_offset,
              lprandom.derive_seed(sub_seed, side))

  recurse(g, np.arange(g.node_count, dtype=np.int64), k, 0, seed)
  p = Partition.from_assignment(assignment, g.node_weights, k)
  p.balance_violated = not balance.is_feasible(p.block_weights)
  logger.debug("recursive_bipartition: k=%d weights=%s violated=%s", k,
               p.block_weights.tolist(), p.balance_violated)
  return p
