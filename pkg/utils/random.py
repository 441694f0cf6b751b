"""Seed derivation and counter-based randomness.

Every random decision in the partitioner is a pure function of the user seed
and a few salts (level, side, attempt, ...). Per-edge decisions use a
vectorised splitmix64 hash of (seed, salt, min(u, v), max(u, v)) so that they
do not depend on the order in which edges are visited.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(x):
  x = (x + GOLDEN) & MASK64
  x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
  x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
  return x ^ (x >> 31)


def derive_seed(seed, *salts):
  """Derives a 64-bit child seed from `seed` and any number of int salts.

  Args:
    seed:  The parent seed, any Python int (negative values are wrapped).
    *salts:  Integers that distinguish the child stream, e.g. a level index.

  Returns:
    A non-negative int below 2**64.
  """
  x = _splitmix64(int(seed) & MASK64)
  for salt in salts:
    x = _splitmix64(x ^ (int(salt) & MASK64))
  return x


def rng(seed, *salts):
  """Returns a `numpy.random.RandomState` seeded from `derive_seed`."""
  return np.random.RandomState(derive_seed(seed, *salts) & 0xFFFFFFFF)


def _mix_array(x):
  # numpy uint64 arithmetic wraps modulo 2**64, which is what splitmix wants
  x = x + np.uint64(GOLDEN)
  x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
  x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
  return x ^ (x >> np.uint64(31))


def edge_uniforms(seed, salt, u, v):
  """Counter-based uniforms in [0, 1) for a batch of undirected edges.

  The value for an edge depends only on (seed, salt, min(u, v), max(u, v)).

  Args:
    seed:  The run seed.
    salt:  An extra integer, typically the hierarchy level.
    u:  Array of first endpoints.
    v:  Array of second endpoints, same shape as `u`.

  Returns:
    A float64 ndarray shaped like `u`.
  """
  u = np.asarray(u, dtype=np.int64)
  v = np.asarray(v, dtype=np.int64)
  lo = np.minimum(u, v).astype(np.uint64)
  hi = np.maximum(u, v).astype(np.uint64)
  base = np.uint64(derive_seed(seed, salt))
  with np.errstate(over='ignore'):
    x = _mix_array(lo ^ base)
    x = _mix_array(x ^ hi)
  # top 53 bits -> exact double in [0, 1)
  return (x >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))
