"""Modularity bookkeeping for one clustering and its contraction.

For a clustering C, e_ij is the fraction of edge ends between clusters i and
j, a_i = sum_j e_ij and Q_C = sum_i (e_ii - a_i^2). The share of intra-cluster
edges is sandwiched by Q_C <= sum_i e_ii <= Q_C + max_i a_i, so a clustering
with low modularity cannot remove many edges by contraction. All quantities
are exact `Fraction`s.
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

from logzero import logger

from coarsening import coarsening_clustering, contract

from .profiles import write_records

_REPORT_FIELDS = ['q_c', 'alpha_c', 'intra_fraction', 'inter_fraction',
                  'parallel_fraction', 'coarse_edge_fraction',
                  'edge_lower_bound']


class ModularityReport(collections.namedtuple('ModularityReport',
                                              _REPORT_FIELDS + ['weighted'])):
  """Modularity terms of a clustering.

  Attributes:
    q_c:  Q_C.
    alpha_c:  max_i a_i.
    intra_fraction:  sum_i e_ii.
    inter_fraction:  1 - sum_i e_ii.
    parallel_fraction:  Share of all edges that are inter-cluster but merged
      into another edge by contraction.
    coarse_edge_fraction:  |E(G')| / |E(G)|.
    edge_lower_bound:  1 - Q_C - alpha_c - parallel_fraction, a lower bound
      on `coarse_edge_fraction` for unweighted reports.
    weighted:  Whether e_ij counts edge weight instead of edges.
  """
  __slots__ = ()

  def sandwich_holds(self):
    return self.q_c <= self.intra_fraction <= self.q_c + self.alpha_c

  def to_dict(self):
    doc = {name: float(getattr(self, name)) for name in _REPORT_FIELDS}
    doc['weighted'] = self.weighted
    return doc

  def write_csv(self, dest):
    """Writes the report as a one-row CSV table to a path or text stream."""
    write_records(self._fields, [self], dest)


def _cluster_sums(g, c, weighted):
  u, v, w = g.edges()
  if not weighted:
    w = np.ones(len(u), dtype=np.int64)
  cu, cv = c.assignment[u], c.assignment[v]
  same = cu == cv
  ends = np.zeros(c.cluster_count, dtype=np.int64)
  np.add.at(ends, cu, w)
  np.add.at(ends, cv, w)
  return int(w.sum()), int(w[same].sum()), ends, int(np.count_nonzero(~same))


def modularity_report(g, c, weighted=False):
  """Computes the `ModularityReport` of clustering `c` of `g`.

  Args:
    g:  The `Graph`, with at least one edge.
    c:  A `Clustering` of `g`.
    weighted:  Count edge weights instead of edges in e_ij and a_i.

  Returns:
    A `ModularityReport`.

  Raises:
    ValueError:  If `g` has no edges or `c` does not cover `g`.
  """
  if g.edge_count == 0:
    raise ValueError("modularity is undefined on an edgeless graph")
  if c.node_count != g.node_count:
    raise ValueError("clustering covers %d nodes, graph has %d"
                     % (c.node_count, g.node_count))
  total, intra, ends, inter_edges = _cluster_sums(g, c, weighted)
  intra_fraction = Fraction(intra, total)
  squares = sum(int(x) * int(x) for x in ends.tolist())
  q_c = intra_fraction - Fraction(squares, 4 * total * total)
  alpha_c = Fraction(int(ends.max()), 2 * total)

  coarse = contract(g, c).coarse
  m = g.edge_count
  parallel = Fraction(inter_edges - coarse.edge_count, m)
  return ModularityReport(
    q_c=q_c,
    alpha_c=alpha_c,
    intra_fraction=intra_fraction,
    inter_fraction=1 - intra_fraction,
    parallel_fraction=parallel,
    coarse_edge_fraction=Fraction(coarse.edge_count, m),
    edge_lower_bound=1 - q_c - alpha_c - parallel,
    weighted=weighted)


EdgeReduction = collections.namedtuple(
  'EdgeReduction', ['remaining_weight_fraction', 'remaining_edge_fraction',
                    'q_c', 'bound_1_minus_qc', 'cluster_count'])


def edge_reduction_study(g, params, clustering=None):
  """Measures how much one coarsening step shrinks the edge set.

  Args:
    g:  The `Graph`, with at least one edge.
    params:  `ClusteringParams` of the coarsening step.
    clustering:  Optional explicit `Clustering`; by default the coarsening
      clustering of `g` under `params` is used.

  Returns:
    An `EdgeReduction` record. `remaining_edge_fraction` never exceeds
    `bound_1_minus_qc`, the share of inter-cluster edges bound by Q_C.
  """
  c = clustering if clustering is not None else coarsening_clustering(g, params)
  coarse = contract(g, c).coarse
  report = modularity_report(g, c)
  record = EdgeReduction(
    remaining_weight_fraction=Fraction(coarse.total_edge_weight,
                                       g.total_edge_weight),
    remaining_edge_fraction=Fraction(coarse.edge_count, g.edge_count),
    q_c=report.q_c,
    bound_1_minus_qc=1 - report.q_c,
    cluster_count=c.cluster_count)
  logger.debug("edge_reduction_study: %d -> %d edges, Q_C=%.4f",
               g.edge_count, coarse.edge_count, float(report.q_c))
  return record


def reduction_to_dict(record):
  doc = {name: float(value) for name, value in record._asdict().items()}
  doc['cluster_count'] = record.cluster_count
  return doc


def write_reduction_csv(record, dest):
  """Writes an `EdgeReduction` as a one-row CSV table."""
  write_records(record._fields, [record], dest)
