# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import numpy as np


class GraphError(ValueError):
  """Raised for input that does not describe a valid graph."""


def _frozen(array, dtype):
  array = np.ascontiguousarray(array, dtype=dtype)
  array.setflags(write=False)
  return array


class Graph(object):
  """An immutable, undirected, node- and edge-weighted graph in CSR form.

  The neighbors of node `u` are `adjncy[xadj[u]:xadj[u+1]]`, sorted by id, with
  the matching edge weights in `adjwgt`. Every undirected edge {u, v} appears
  twice, once in each endpoint's list, with the same weight. Node ids are dense
  and 0-based. All arrays are read-only, so a `Graph` can be shared freely.
  """

  def __init__(self, xadj, adjncy, adjwgt, node_weights, validate=True):
    """Wraps already-built CSR arrays.

    Most callers want `build_graph` instead, which accepts an edge list.

    Args:
      xadj:  Offsets, length `n + 1`.
      adjncy:  Neighbor ids, length `2m`, sorted within each node.
      adjwgt:  Edge weights matching `adjncy`.
      node_weights:  Node weights, length `n`.
      validate:  Whether to check the invariants. Internal constructors that
        preserve them by construction pass `False`.

    Raises:
      GraphError:  If `validate` is set and an invariant is violated.
    """
    self._xadj = _frozen(xadj, np.int64)
    self._adjncy = _frozen(adjncy, np.int64)
    self._adjwgt = _frozen(adjwgt, np.int64)
    self._node_weights = _frozen(node_weights, np.int64)
    self._edge_ids = None
    if validate:
      self.validate()

  @property
  def node_count(self):
    return len(self._node_weights)

  @property
  def edge_count(self):
    return len(self._adjncy) // 2

  @property
  def xadj(self):
    return self._xadj

  @property
  def adjncy(self):
    return self._adjncy

  @property
  def adjwgt(self):
    return self._adjwgt

  @property
  def node_weights(self):
    return self._node_weights

  @property
  def total_node_weight(self):
    return int(self._node_weights.sum())

  @property
  def total_edge_weight(self):
    """Sum of undirected edge weights, each edge counted once."""
    return int(self._adjwgt.sum()) // 2

  @property
  def max_node_weight(self):
    return int(self._node_weights.max()) if self.node_count else 0

  def degrees(self):
    return np.diff(self._xadj)

  def weighted_degrees(self):
    """Sum of incident edge weights per node."""
    return np.bincount(self.tails(), weights=self._adjwgt,
                       minlength=self.node_count).astype(np.int64)

  def tails(self):
    """Source node of every directed adjacency entry."""
    return np.repeat(np.arange(self.node_count, dtype=np.int64),
                     self.degrees())

  def neighbors(self, u):
    """Returns `(ids, weights)` views of node `u`'s adjacency."""
    lo, hi = self._xadj[u], self._xadj[u + 1]
    return self._adjncy[lo:hi], self._adjwgt[lo:hi]

  @property
  def edge_ids(self):
    """Undirected edge id of every directed entry.

    Ids number the edges in lexicographic (u, v), u < v, order, which is the
    order `edges()` returns them in.
    """
    if self._edge_ids is None:
      n = self.node_count
      tails = self.tails()
      keys = np.minimum(tails, self._adjncy) * n + np.maximum(
        tails, self._adjncy)
      forward_keys = keys[tails < self._adjncy]
      self._edge_ids = _frozen(np.searchsorted(forward_keys, keys), np.int64)
    return self._edge_ids

  def edges(self):
    """Returns `(u, v, w)` arrays of the undirected edges with `u < v`."""
    tails = self.tails()
    forward = tails < self._adjncy
    return tails[forward], self._adjncy[forward], self._adjwgt[forward]

  def keep_edges(self, mask):
    """Builds a graph on the same nodes holding a subset of the edges.

    Args:
      mask:  Boolean array over undirected edge ids (see `edge_ids`).

    Returns:
      A new `Graph`; kept edges retain their weights.
    """
    mask = np.asarray(mask, dtype=bool)
    if len(mask) != self.edge_count:
      raise GraphError("edge mask has length %d, graph has %d edges"
                       % (len(mask), self.edge_count))
    keep = mask[self.edge_ids]
    counts = np.bincount(self.tails()[keep], minlength=self.node_count)
    xadj = np.zeros(self.node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=xadj[1:])
    return Graph(xadj, self._adjncy[keep], self._adjwgt[keep],
                 self._node_weights, validate=False)

  def induced_subgraph(self, nodes_mask):
    """Extracts the subgraph induced by a node subset.

    Args:
      nodes_mask:  Boolean array of length `node_count`.

    Returns:
      `(subgraph, original_ids)` where `original_ids[i]` is the id in this
      graph of node `i` of the subgraph.
    """
    nodes_mask = np.asarray(nodes_mask, dtype=bool)
    original_ids = np.flatnonzero(nodes_mask)
    new_ids = np.full(self.node_count, -1, dtype=np.int64)
    new_ids[original_ids] = np.arange(len(original_ids))
    tails = self.tails()
    keep = nodes_mask[tails] & nodes_mask[self._adjncy]
    counts = np.bincount(new_ids[tails[keep]], minlength=len(original_ids))
    xadj = np.zeros(len(original_ids) + 1, dtype=np.int64)
    np.cumsum(counts, out=xadj[1:])
    # relabeling is monotone, so per-node sortedness survives
    sub = Graph(xadj, new_ids[self._adjncy[keep]], self._adjwgt[keep],
                self._node_weights[original_ids], validate=False)
    return sub, original_ids

  def validate(self):
    """Checks every structural invariant.

    Raises:
      GraphError:  Describing the first violated invariant.
    """
    n = self.node_count
    xadj, adjncy, adjwgt = self._xadj, self._adjncy, self._adjwgt
    if len(xadj) != n + 1 or xadj[0] != 0 or xadj[-1] != len(adjncy):
      raise GraphError("offset array does not match node/entry counts")
    if len(adjwgt) != len(adjncy):
      raise GraphError("edge weight array does not match adjacency length")
    if np.any(np.diff(xadj) < 0):
      raise GraphError("offset array is not monotone")
    if n and np.any(self._node_weights < 1):
      raise GraphError("node weights must be >= 1")
    if len(adjncy) == 0:
      return
    if np.any(adjwgt < 1):
      raise GraphError("edge weights must be >= 1")
    if np.any(adjncy < 0) or np.any(adjncy >= n):
      raise GraphError("neighbor id out of range")
    tails = self.tails()
    if np.any(tails == adjncy):
      raise GraphError("self-loop on node %d" % tails[tails == adjncy][0])
    # strictly increasing neighbor ids within each node: sorted, no duplicates
    same_node = tails[1:] == tails[:-1]
    if np.any(adjncy[1:][same_node] <= adjncy[:-1][same_node]):
      raise GraphError("adjacency not sorted or contains duplicate neighbors")
    if len(adjncy) % 2:
      raise GraphError("odd number of adjacency entries")
    forward = np.lexsort((adjncy, tails))
    backward = np.lexsort((tails, adjncy))
    if (np.any(tails[forward] != adjncy[backward])
        or np.any(adjncy[forward] != tails[backward])
        or np.any(adjwgt[forward] != adjwgt[backward])):
      raise GraphError("adjacency is not symmetric")

  def __eq__(self, other):
    if not isinstance(other, Graph):
      return NotImplemented
    return (np.array_equal(self._xadj, other._xadj)
            and np.array_equal(self._adjncy, other._adjncy)
            and np.array_equal(self._adjwgt, other._adjwgt)
            and np.array_equal(self._node_weights, other._node_weights))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  def __repr__(self):
    return "Graph(n=%d, m=%d, c(V)=%d)" % (
      self.node_count, self.edge_count, self.total_node_weight)


def build_graph(edges, node_weights=None, node_count=None, self_loops='reject'):
  """Builds a validated `Graph` from an undirected edge list.

  Duplicate pairs, in either orientation, are merged by summing their weights.

  Args:
    edges:  A sequence of `(u, v, weight)` triples, or an integer array shaped
      `(m, 3)`. Pairs `(u, v)` without weight default to weight 1.
    node_weights:  Optional per-node weights. Defaults to all ones.
    node_count:  Optional node count. Defaults to `len(node_weights)` if given,
      otherwise one more than the largest id in `edges`.
    self_loops:  `'reject'` to raise on `(u, u, w)`, `'drop'` to discard them.

  Returns:
    The `Graph`.

  Raises:
    GraphError:  On self-loops in reject mode, ids out of range or weights
      below 1.
  """
  if self_loops not in ('reject', 'drop'):
    raise ValueError("self_loops must be 'reject' or 'drop', got %r"
                     % (self_loops,))
  triples = _as_triples(edges)
  u, v, w = triples[:, 0], triples[:, 1], triples[:, 2]

  if node_weights is not None:
    node_weights = np.asarray(node_weights, dtype=np.int64)
    if node_count is None:
      node_count = len(node_weights)
    elif len(node_weights) != node_count:
      raise GraphError("got %d node weights for %d nodes"
                       % (len(node_weights), node_count))
  if node_count is None:
    node_count = int(max(u.max(), v.max())) + 1 if len(u) else 0
  if node_weights is None:
    node_weights = np.ones(node_count, dtype=np.int64)
  if np.any(node_weights < 1):
    raise GraphError("node weights must be >= 1")

  if len(u) and (min(u.min(), v.min()) < 0
                 or max(u.max(), v.max()) >= node_count):
    raise GraphError("node id out of range [0, %d)" % node_count)
  if np.any(w < 1):
    raise GraphError("edge weights must be >= 1")
  loops = u == v
  if np.any(loops):
    if self_loops == 'reject':
      raise GraphError("self-loop on node %d" % u[loops][0])
    u, v, w = u[~loops], v[~loops], w[~loops]

  keys, merged = merge_parallel(np.minimum(u, v) * node_count + np.maximum(u, v),
                                w)
  lo, hi = keys // max(node_count, 1), keys % max(node_count, 1)
  return from_directed_entries(node_count, np.concatenate((lo, hi)),
                               np.concatenate((hi, lo)),
                               np.concatenate((merged, merged)), node_weights,
                               validate=True)


def merge_parallel(keys, weights):
  """Sums `weights` over equal `keys`.

  Returns:
    `(unique_keys, summed_weights)`, keys ascending, weights as int64.
  """
  keys = np.asarray(keys, dtype=np.int64)
  weights = np.asarray(weights, dtype=np.int64)
  if len(keys) == 0:
    return keys, weights
  order = np.argsort(keys, kind='stable')
  keys = keys[order]
  starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
  return keys[starts], np.add.reduceat(weights[order], starts)


def from_directed_entries(node_count, tails, heads, weights, node_weights,
                          validate=False):
  """Assembles CSR arrays from unique, already symmetric directed entries."""
  tails = np.asarray(tails, dtype=np.int64)
  heads = np.asarray(heads, dtype=np.int64)
  order = np.lexsort((heads, tails))
  counts = np.bincount(tails, minlength=node_count)
  xadj = np.zeros(node_count + 1, dtype=np.int64)
  np.cumsum(counts, out=xadj[1:])
  return Graph(xadj, heads[order], np.asarray(weights, dtype=np.int64)[order],
               node_weights, validate=validate)


def _as_triples(edges):
  rows = [tuple(e) for e in edges] if not isinstance(edges, np.ndarray) \
    else edges
  if len(rows) == 0:
    return np.zeros((0, 3), dtype=np.int64)
  if isinstance(rows, np.ndarray):
    array = rows.astype(np.int64)
  else:
    if any(len(r) not in (2, 3) for r in rows):
      raise GraphError("edges must be (u, v) or (u, v, weight) tuples")
    array = np.array([r if len(r) == 3 else (r[0], r[1], 1) for r in rows],
                     dtype=np.int64)
  if array.ndim != 2 or array.shape[1] not in (2, 3):
    raise GraphError("edge array must be shaped (m, 2) or (m, 3)")
  if array.shape[1] == 2:
    array = np.column_stack((array, np.ones(len(array), dtype=np.int64)))
  return array
