# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import numpy as np

from graphs.graph import from_directed_entries, merge_parallel


class ContractionResult(object):
  """A coarse graph and the map from fine nodes to coarse nodes."""

  def __init__(self, coarse, fine_to_coarse):
    self.coarse = coarse
    self.fine_to_coarse = fine_to_coarse

  def __iter__(self):
    return iter((self.coarse, self.fine_to_coarse))


def contract(g, c):
  """Contracts every cluster of `c` into one coarse node.

  Coarse node `i` is cluster `i`, weighted with the cluster weight. Parallel
  inter-cluster edges are merged by summing their weights; intra-cluster
  edges disappear.

  Args:
    g:  The fine `Graph`.
    c:  A `Clustering` of `g`.

  Returns:
    A `ContractionResult`.
  """
  if c.node_count != g.node_count:
    raise ValueError("clustering covers %d nodes, graph has %d"
                     % (c.node_count, g.node_count))
  f2c = c.assignment
  nc = c.cluster_count
  cu = f2c[g.tails()]
  cv = f2c[g.adjncy]
  inter = cu != cv
  keys, weights = merge_parallel(cu[inter] * nc + cv[inter], g.adjwgt[inter])
  coarse = from_directed_entries(nc, keys // max(nc, 1), keys % max(nc, 1),
                                 weights, c.cluster_weights)
  return ContractionResult(coarse, f2c)
