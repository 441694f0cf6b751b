"""Size-constrained label propagation clustering for coarsening.

A coarsening step clusters the current graph in three stages:

  1. `lp_cluster`: label propagation where every node joins the adjacent
     cluster it is most strongly connected to, as long as the cluster stays
     within the weight limit U.
  2. `two_hop_cluster`: singletons left over by stage 1 that share the same
     favorite cluster are merged with each other.
  3. `cluster_isolated`: degree-0 nodes are packed into clusters of weight at
     most U.

Once stage 1 has converged, no non-isolated singleton can join any adjacent
cluster, and after stage 2 no two singletons of weight at most U/2 share a
favorite. Together this bounds the cluster count by |V|/2 + c(V)/U, which
makes the number of nodes shrink geometrically from level to level.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import math

from fractions import Fraction

import numpy as np

from logzero import logger

from utils import random as lprandom

# salt separating the visit-order stream from other uses of the same seed
_ORDER_SALT = 0x6C70


class Clustering(object):
  """A node to cluster assignment with dense cluster ids.

  Attributes:
    assignment:  int64 ndarray, cluster id of every node, ids in
      `[0, cluster_count)`.
    cluster_weights:  int64 ndarray, total node weight of every cluster.
  """

  def __init__(self, assignment, cluster_weights):
    self.assignment = np.asarray(assignment, dtype=np.int64)
    self.cluster_weights = np.asarray(cluster_weights, dtype=np.int64)

  @classmethod
  def from_labels(cls, labels, node_weights):
    """Compacts arbitrary integer labels into a dense `Clustering`.

    Dense ids follow the ascending order of the original labels.
    """
    labels = np.asarray(labels, dtype=np.int64)
    if len(labels) == 0:
      return cls(labels, np.zeros(0, dtype=np.int64))
    _, assignment = np.unique(labels, return_inverse=True)
    assignment = assignment.reshape(-1)
    weights = np.bincount(assignment, weights=node_weights).astype(np.int64)
    return cls(assignment, weights)

  @classmethod
  def singletons(cls, g):
    return cls(np.arange(g.node_count, dtype=np.int64), g.node_weights.copy())

  @property
  def cluster_count(self):
    return len(self.cluster_weights)

  @property
  def node_count(self):
    return len(self.assignment)

  def cluster_sizes(self):
    """Number of member nodes per cluster."""
    return np.bincount(self.assignment, minlength=self.cluster_count)

  def __eq__(self, other):
    if not isinstance(other, Clustering):
      return NotImplemented
    return (np.array_equal(self.assignment, other.assignment)
            and np.array_equal(self.cluster_weights, other.cluster_weights))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  def __repr__(self):
    return "Clustering(n=%d, clusters=%d)" % (self.node_count,
                                              self.cluster_count)


class ClusteringParams(object):
  """Tunables of the coarsening clustering.

  Attributes:
    max_cluster_weight:  The weight limit U.
    max_rounds:  Label propagation rounds; `None` runs until a round makes no
      move.
    shrink_cap:  Largest allowed node reduction factor of one coarsening step;
      `None` disables the cap.
    seed:  Seed of the visit order.
  """

  def __init__(self, max_cluster_weight, max_rounds=5, shrink_cap=2.5, seed=1):
    self.max_cluster_weight = max_cluster_weight
    self.max_rounds = max_rounds
    self.shrink_cap = shrink_cap
    self.seed = seed
    self.validate()

  def validate(self):
    if self.max_cluster_weight < 1:
      raise ValueError("max_cluster_weight must be >= 1, got %r"
                       % (self.max_cluster_weight,))
    if self.max_rounds is not None and self.max_rounds < 1:
      raise ValueError("max_rounds must be >= 1 or None")
    if self.shrink_cap is not None and self.shrink_cap < 1:
      raise ValueError("shrink_cap must be >= 1 or None")

  def cluster_floor(self, node_count):
    """Fewest clusters a step on `node_count` nodes may produce."""
    if self.shrink_cap is None:
      return 0
    return int(math.ceil(Fraction(node_count) / Fraction(str(self.shrink_cap))))

  def with_weight(self, max_cluster_weight, seed=None):
    """A copy with another weight limit and, optionally, another seed."""
    return ClusteringParams(max_cluster_weight, self.max_rounds,
                            self.shrink_cap,
                            self.seed if seed is None else seed)

  def to_dict(self):
    return {
      'max_cluster_weight': self.max_cluster_weight,
      'max_rounds': self.max_rounds,
      'shrink_cap': self.shrink_cap,
      'seed': self.seed,
    }


def _connection_ratings(u, labels, xadj, adjncy, adjwgt):
  rating = {}
  for i in range(xadj[u], xadj[u + 1]):
    c = labels[adjncy[i]]
    rating[c] = rating.get(c, 0) + adjwgt[i]
  return rating


def lp_cluster(g, params):
  """Size-constrained label propagation, starting from singletons.

  Nodes are visited in a seeded random order, re-used in every round. A node
  moves to the adjacent cluster with the heaviest connection among those with
  room for it; its current cluster wins ties, otherwise the lowest cluster id
  does. Weights are updated immediately. Stops after `max_rounds`, after a
  round without moves, or once the cluster count reaches the shrink-cap floor.

  Args:
    g:  The `Graph`.
    params:  `ClusteringParams`.

  Returns:
    A `Clustering`.
  """
  n = g.node_count
  xadj, adjncy, adjwgt = g.xadj.tolist(), g.adjncy.tolist(), g.adjwgt.tolist()
  node_weights = g.node_weights.tolist()
  limit = params.max_cluster_weight
  labels = list(range(n))
  weights = list(node_weights)
  sizes = [1] * n
  live = n
  floor = params.cluster_floor(n)

  degrees = g.degrees()
  order = lprandom.rng(params.seed, _ORDER_SALT).permutation(n)
  order = order[degrees[order] > 0].tolist()

  rounds = 0
  stopped = live <= floor
  while not stopped and (params.max_rounds is None
                         or rounds < params.max_rounds):
    rounds += 1
    moves = 0
    for u in order:
      current = labels[u]
      rating = _connection_ratings(u, labels, xadj, adjncy, adjwgt)
      weight_u = node_weights[u]
      best, best_rating = current, rating.get(current, 0)
      for c, r in rating.items():
        if c == current or weights[c] + weight_u > limit:
          continue
        if r > best_rating or (r == best_rating and best != current
                               and c < best):
          best, best_rating = c, r
      if best == current:
        continue
      weights[current] -= weight_u
      sizes[current] -= 1
      if sizes[current] == 0:
        live -= 1
      weights[best] += weight_u
      sizes[best] += 1
      labels[u] = best
      moves += 1
      if live <= floor:
        stopped = True
        break
    logger.debug("lp_cluster round %d: %d moves, %d clusters", rounds, moves,
                 live)
    if moves == 0:
      break
  return Clustering.from_labels(labels, g.node_weights)


def favorite_clusters(g, c):
  """Favorite cluster of every non-isolated singleton.

  The favorite is the adjacent cluster with the heaviest connection, ties
  going to the lowest cluster id. The weight limit plays no role here.

  Returns:
    A dict mapping favorite cluster id to the ascending list of singleton
    nodes that prefer it.
  """
  xadj, adjncy, adjwgt = g.xadj.tolist(), g.adjncy.tolist(), g.adjwgt.tolist()
  labels = c.assignment.tolist()
  singleton = (c.cluster_sizes() == 1)[c.assignment] & (g.degrees() > 0)
  groups = {}
  for v in np.flatnonzero(singleton).tolist():
    rating = _connection_ratings(v, labels, xadj, adjncy, adjwgt)
    favorite = min(rating, key=lambda k: (-rating[k], k))
    groups.setdefault(favorite, []).append(v)
  return groups


def _pack(groups, labels, weights, node_weights, limit, live, floor):
  """First-fit packing of each group's nodes, in order, into clusters <= U.

  A node joins the first of the group's open clusters it fits into and
  otherwise opens a new one. Clusters with no room left for the group's
  lightest node are closed. Returns the new live cluster count.
  """
  for members in groups:
    lightest = min(node_weights[v] for v in members)
    open_clusters = []
    for v in members:
      if live <= floor:
        return live
      weight_v = node_weights[v]
      for i, target in enumerate(open_clusters):
        if weights[target] + weight_v <= limit:
          weights[labels[v]] -= weight_v
          weights[target] += weight_v
          labels[v] = target
          live -= 1
          if weights[target] + lightest > limit:
            del open_clusters[i]
          break
      else:
        if weight_v + lightest <= limit:
          open_clusters.append(labels[v])
  return live


def two_hop_cluster(g, c, params):
  """Merges singleton clusters that share a favorite cluster.

  Args:
    g:  The `Graph`.
    c:  The `Clustering` produced by `lp_cluster` on `g`.
    params:  `ClusteringParams`.

  Returns:
    A `Clustering`; identical to `c` if there is nothing to merge.
  """
  groups = favorite_clusters(g, c)
  if not groups:
    return c
  labels = c.assignment.tolist()
  weights = c.cluster_weights.tolist()
  before = c.cluster_count
  live = _pack([groups[f] for f in sorted(groups)], labels, weights,
               g.node_weights.tolist(), params.max_cluster_weight,
               before, params.cluster_floor(g.node_count))
  logger.debug("two_hop_cluster: %d singleton groups, %d merges", len(groups),
               before - live)
  if live == before:
    return c
  return Clustering.from_labels(labels, g.node_weights)


def cluster_isolated(g, c, params):
  """Packs degree-0 nodes, in id order, into clusters of weight <= U.

  Isolated nodes heavier than U stay singletons.
  """
  isolated = np.flatnonzero(g.degrees() == 0).tolist()
  if len(isolated) < 2:
    return c
  labels = c.assignment.tolist()
  weights = c.cluster_weights.tolist()
  before = c.cluster_count
  live = _pack([isolated], labels, weights, g.node_weights.tolist(),
               params.max_cluster_weight, before,
               params.cluster_floor(g.node_count))
  if live == before:
    return c
  return Clustering.from_labels(labels, g.node_weights)


def coarsening_clustering(g, params):
  """The clustering contracted by one coarsening step.

  Runs `lp_cluster`, `two_hop_cluster` and `cluster_isolated` in turn; the
  result has dense cluster ids.
  """
  c = lp_cluster(g, params)
  c = two_hop_cluster(g, c, params)
  c = cluster_isolated(g, c, params)
  logger.debug("coarsening_clustering: %d nodes -> %d clusters (U=%d)",
               g.node_count, c.cluster_count, params.max_cluster_weight)
  return c
