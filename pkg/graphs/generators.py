"""Seeded random-graph generators.

All generators are deterministic for a fixed `GeneratorSpec` (seed included).
Bernoulli edge sets are drawn by geometric skipping over the pair index space,
so the work is proportional to the number of generated edges rather than to
the number of node pairs.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import numpy as np

from logzero import logger

from utils import random as lprandom
from .graph import build_graph

ERDOS_RENYI = 'erdos_renyi'
PLANTED_PARTITION = 'planted_partition'
CHUNG_LU = 'chung_lu'
PATH = 'path'
STAR = 'star'
KINDS = (ERDOS_RENYI, PLANTED_PARTITION, CHUNG_LU, PATH, STAR)

DEFAULT_MAX_EDGES = 50 * 1000 * 1000


class GeneratorError(ValueError):
  """Raised for an invalid generator spec or an oversized request."""


class GeneratorSpec(object):
  """Describes one random graph instance.

  Attributes:
    kind:  One of `KINDS`.
    node_count:  Number of nodes.
    p:  Edge probability (erdos_renyi). Mutually exclusive with `edge_count`.
    edge_count:  Target expected edge count (erdos_renyi); converted to `p`.
    blocks:  Number of ground-truth blocks (planted_partition).
    p_in:  Intra-block edge probability (planted_partition).
    p_out:  Inter-block edge probability (planted_partition).
    avg_degree:  Expected average degree (chung_lu).
    exponent:  Power-law exponent of the expected degrees (chung_lu).
    seed:  Integer seed.
    max_edges:  Memory budget; requests expecting more edges are refused.
  """

  def __init__(self, kind, node_count, p=None, edge_count=None, blocks=None,
               p_in=None, p_out=None, avg_degree=None, exponent=2.5, seed=1,
               max_edges=DEFAULT_MAX_EDGES):
    self.kind = kind
    self.node_count = node_count
    self.p = p
    self.edge_count = edge_count
    self.blocks = blocks
    self.p_in = p_in
    self.p_out = p_out
    self.avg_degree = avg_degree
    self.exponent = exponent
    self.seed = seed
    self.max_edges = max_edges
    self.validate()

  def validate(self):
    if self.kind not in KINDS:
      raise GeneratorError("unknown generator kind %r" % (self.kind,))
    if self.node_count < 0:
      raise GeneratorError("node_count must be >= 0")
    pairs = _pair_count(self.node_count)
    if self.kind == ERDOS_RENYI:
      if (self.p is None) == (self.edge_count is None):
        raise GeneratorError("erdos_renyi needs exactly one of p, edge_count")
      if self.edge_count is not None:
        if not 0 <= self.edge_count <= pairs:
          raise GeneratorError("edge_count %d outside [0, %d]"
                               % (self.edge_count, pairs))
      else:
        _check_probability('p', self.p)
    elif self.kind == PLANTED_PARTITION:
      if self.blocks is None or self.blocks < 2:
        raise GeneratorError("planted_partition needs blocks >= 2")
      _check_probability('p_in', self.p_in)
      _check_probability('p_out', self.p_out)
    elif self.kind == CHUNG_LU:
      if self.avg_degree is None or self.avg_degree <= 0:
        raise GeneratorError("chung_lu needs avg_degree > 0")
      if self.exponent <= 2:
        raise GeneratorError("chung_lu exponent must be > 2")
    if self.expected_edges() > self.max_edges:
      raise GeneratorError(
        "expected %.0f edges exceeds the budget of %d"
        % (self.expected_edges(), self.max_edges))

  def edge_probability(self):
    """The erdos_renyi pair probability, derived from `edge_count` if needed."""
    if self.p is not None:
      return float(self.p)
    pairs = _pair_count(self.node_count)
    return self.edge_count / pairs if pairs else 0.0

  def expected_edges(self):
    n = self.node_count
    if self.kind == ERDOS_RENYI:
      return _pair_count(n) * self.edge_probability()
    if self.kind == PLANTED_PARTITION:
      sizes = _block_sizes(n, self.blocks)
      intra = sum(_pair_count(s) for s in sizes)
      return intra * self.p_in + (_pair_count(n) - intra) * self.p_out
    if self.kind == CHUNG_LU:
      return n * self.avg_degree / 2.0
    return max(n - 1, 0)

  def to_dict(self):
    keys = ('kind', 'node_count', 'p', 'edge_count', 'blocks', 'p_in', 'p_out',
            'avg_degree', 'exponent', 'seed')
    return dict((k, getattr(self, k)) for k in keys
                if getattr(self, k) is not None)


def _check_probability(name, value):
  if value is None or not 0.0 <= value <= 1.0:
    raise GeneratorError("%s must be a probability, got %r" % (name, value))


def _pair_count(n):
  return n * (n - 1) // 2


def _block_sizes(n, blocks):
  return [len(range(b, n, blocks)) for b in range(blocks)]


def bernoulli_indices(total, p, random_state):
  """Indices in `[0, total)`, each present independently with probability p.

  Draws geometric gaps between successive successes in vectorised batches.

  Returns:
    A sorted int64 ndarray.
  """
  if total <= 0 or p <= 0.0:
    return np.zeros(0, dtype=np.int64)
  if p >= 1.0:
    return np.arange(total, dtype=np.int64)
  chunks = []
  position = -1
  while True:
    remaining = total - position - 1
    size = int(remaining * p * 1.1) + 64
    idx = position + np.cumsum(random_state.geometric(p, size=size))
    if idx[-1] >= total:
      chunks.append(idx[idx < total])
      break
    chunks.append(idx)
    position = int(idx[-1])
  return np.concatenate(chunks).astype(np.int64)


def decode_pairs(idx):
  """Maps triangular pair indices to `(u, v)` with `u < v`.

  Pairs are numbered column by column: `idx = v(v-1)/2 + u`.
  """
  idx = np.asarray(idx, dtype=np.int64)
  v = ((1.0 + np.sqrt(1.0 + 8.0 * idx.astype(np.float64))) // 2).astype(
    np.int64)
  v -= (v * (v - 1) // 2 > idx).astype(np.int64)
  v += ((v + 1) * v // 2 <= idx).astype(np.int64)
  return idx - v * (v - 1) // 2, v


def _erdos_renyi_edges(n, p, random_state):
  u, v = decode_pairs(bernoulli_indices(_pair_count(n), p, random_state))
  return u, v


def _planted_edges(spec):
  n, blocks = spec.node_count, spec.blocks
  sizes = _block_sizes(n, blocks)
  us, vs = [], []
  for a in range(blocks):
    local_u, local_v = _erdos_renyi_edges(
      sizes[a], spec.p_in, lprandom.rng(spec.seed, a, a))
    us.append(local_u * blocks + a)
    vs.append(local_v * blocks + a)
    for b in range(a + 1, blocks):
      idx = bernoulli_indices(sizes[a] * sizes[b], spec.p_out,
                              lprandom.rng(spec.seed, a, b))
      us.append((idx // sizes[b]) * blocks + a)
      vs.append((idx % sizes[b]) * blocks + b)
  return np.concatenate(us), np.concatenate(vs)


def _chung_lu_edges(spec):
  n = spec.node_count
  if n < 2:
    return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
  random_state = lprandom.rng(spec.seed)
  expected = (np.arange(1, n + 1, dtype=np.float64)
              ** (-1.0 / (spec.exponent - 1.0)))
  expected *= spec.avg_degree * n / expected.sum()
  draws = random_state.poisson(expected.sum() / 2.0)
  probs = expected / expected.sum()
  u = random_state.choice(n, size=draws, p=probs)
  v = random_state.choice(n, size=draws, p=probs)
  loops = u == v
  keys = np.unique(np.minimum(u, v)[~loops] * n + np.maximum(u, v)[~loops])
  return keys // n, keys % n


def generate(spec):
  """Generates the graph described by `spec`.

  Args:
    spec:  A `GeneratorSpec`.

  Returns:
    An unweighted `Graph`.

  Raises:
    GeneratorError:  If the spec is invalid or exceeds its edge budget.
  """
  spec.validate()
  n = spec.node_count
  if spec.kind == ERDOS_RENYI:
    u, v = _erdos_renyi_edges(n, spec.edge_probability(),
                              lprandom.rng(spec.seed))
  elif spec.kind == PLANTED_PARTITION:
    u, v = _planted_edges(spec)
  elif spec.kind == CHUNG_LU:
    u, v = _chung_lu_edges(spec)
  elif spec.kind == PATH:
    u = np.arange(max(n - 1, 0), dtype=np.int64)
    v = u + 1
  else:
    v = np.arange(1, max(n, 1), dtype=np.int64)
    u = np.zeros(len(v), dtype=np.int64)
  g = build_graph(np.column_stack((u, v)), node_count=n)
  logger.debug("Generated %s graph: %r", spec.kind, g)
  return g


def ground_truth(spec):
  """The planted block of every node: `node_id mod blocks`."""
  if spec.kind != PLANTED_PARTITION:
    raise GeneratorError("only planted_partition has a ground truth")
  return np.arange(spec.node_count, dtype=np.int64) % spec.blocks


def path_graph(n):
  return generate(GeneratorSpec(PATH, n))


def star_graph(leaves):
  return generate(GeneratorSpec(STAR, leaves + 1))
