# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

from utils.random import edge_uniforms
from .sparsifier import Sparsifier


def uniform_sample(g, target, seed, level=0):
  """Keeps every edge independently with probability `target / edge_count`.

  The decision for edge {u, v} is a function of (seed, level, u, v) only.
  """
  Sparsifier.check_target(g, target)
  if g.edge_count == 0 or target == g.edge_count:
    return g
  p = target / g.edge_count
  u, v, _ = g.edges()
  return g.keep_edges(edge_uniforms(seed, level, u, v) < p)


class UniformSampler(Sparsifier):
  """Uniform random edge sampling, oblivious to edge weights."""

  def sample(self, g, target, level=0):
    return uniform_sample(g, target, self._cfg.seed, level)
