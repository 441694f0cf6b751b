# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import math

from abc import ABCMeta, abstractmethod
from fractions import Fraction

from six import with_metaclass

from utils import ReadOnlyDict

__all__ = [
  "NONE", "UNIFORM", "THRESHOLD_WEIGHT", "THRESHOLD_FF", "THRESHOLD_WFF",
  "METHODS", "CLI_NAMES", "SparsifierError", "SparsifyConfig",
  "target_edge_count", "should_sparsify", "Sparsifier"]

NONE = 'none'
UNIFORM = 'uniform'
THRESHOLD_WEIGHT = 'threshold_weight'
THRESHOLD_FF = 'threshold_ff'
THRESHOLD_WFF = 'threshold_wff'
METHODS = (NONE, UNIFORM, THRESHOLD_WEIGHT, THRESHOLD_FF, THRESHOLD_WFF)

# command-line spelling -> method
CLI_NAMES = ReadOnlyDict({
  'none': NONE,
  'uniform': UNIFORM,
  't-weight': THRESHOLD_WEIGHT,
  't-ff': THRESHOLD_FF,
  't-wff': THRESHOLD_WFF,
})


class SparsifierError(ValueError):
  """Raised for an unknown method or an out-of-range edge target."""


def _exact(x):
  return x if isinstance(x, (int, Fraction)) else Fraction(str(x))


class SparsifyConfig(object):
  """Tunables of the sparsification step.

  Attributes:
    method:  One of `METHODS`.
    tau_e:  Edge threshold; the coarse graph keeps at most `tau_e` times the
      edges of the finer graph.
    tau_d:  Density threshold; the coarse average degree is at most `tau_d`
      times the finer one.
    rho:  Sparsify only if this cuts the edge count by at least this factor.
    ff_p:  Forest Fire stop probability after each burned edge.
    ff_nu:  Forest Fire burn ratio; fires are launched until more than
      `ff_nu * |E|` edges burned.
    seed:  Seed of all sampling decisions.
  """

  def __init__(self, method=THRESHOLD_WEIGHT, tau_e=0.5, tau_d=0.5, rho=4,
               ff_p=0.6, ff_nu=0.5, seed=1):
    self.method = CLI_NAMES.get(method, method)
    self.tau_e = tau_e
    self.tau_d = tau_d
    self.rho = rho
    self.ff_p = ff_p
    self.ff_nu = ff_nu
    self.seed = seed
    self.validate()

  def validate(self):
    if self.method not in METHODS:
      raise SparsifierError("unknown sparsification method %r"
                            % (self.method,))
    if not 0 < self.tau_e <= 1:
      raise ValueError("tau_e must lie in (0, 1], got %r" % (self.tau_e,))
    if self.tau_d <= 0:
      raise ValueError("tau_d must be positive, got %r" % (self.tau_d,))
    if self.rho < 1:
      raise ValueError("rho must be >= 1, got %r" % (self.rho,))
    if not 0 < self.ff_p <= 1:
      raise ValueError("ff_p must lie in (0, 1], got %r" % (self.ff_p,))
    if self.ff_nu <= 0:
      raise ValueError("ff_nu must be positive, got %r" % (self.ff_nu,))

  def with_seed(self, seed):
    return SparsifyConfig(self.method, self.tau_e, self.tau_d, self.rho,
                          self.ff_p, self.ff_nu, seed)

  def to_dict(self):
    return {
      'method': self.method,
      'tau_e': self.tau_e,
      'tau_d': self.tau_d,
      'rho': self.rho,
      'ff_p': self.ff_p,
      'ff_nu': self.ff_nu,
      'seed': self.seed,
    }


def target_edge_count(prev_edges, prev_nodes, coarse_nodes, cfg):
  """The edge budget m̂ of the next level.

  m̂ = floor(min(tau_e * m_i, tau_d * (m_i / n_i) * n_{i+1})), raised to 1 when
  the minimum is positive.

  Args:
    prev_edges:  Edge count m_i of the finer graph.
    prev_nodes:  Node count n_i of the finer graph, positive.
    coarse_nodes:  Node count n_{i+1} of the contracted graph.
    cfg:  `SparsifyConfig`.

  Returns:
    The integer target.
  """
  if prev_nodes <= 0:
    raise ValueError("prev_nodes must be positive")
  bound = min(_exact(cfg.tau_e) * prev_edges,
              _exact(cfg.tau_d) * Fraction(prev_edges, prev_nodes)
              * coarse_nodes)
  if bound <= 0:
    return 0
  return max(1, int(math.floor(bound)))


def should_sparsify(coarse_edges, target, cfg):
  """Whether the contracted graph exceeds its budget by more than rho."""
  return coarse_edges > _exact(cfg.rho) * target


class Sparsifier(with_metaclass(ABCMeta, object)):
  """An abstract edge sampler that shrinks a graph towards an edge target."""

  def __init__(self, cfg):
    """Args:
      cfg:  The `SparsifyConfig` this sampler was built from.
    """
    self._cfg = cfg

  @abstractmethod
  def sample(self, g, target, level=0):
    """Samples the edges of `g` down to `target` in expectation.

    The node set and node weights are preserved, no edge is added, and kept
    edges retain their weights.

    Args:
      g:  The `Graph` to sparsify.
      target:  The expected number of remaining edges, in `[0, edge_count]`.
      level:  Hierarchy level, salting the randomness so that every level
        draws independently.

    Returns:
      The sparsified `Graph`.
    """
    pass

  @property
  def config(self):
    return self._cfg

  @staticmethod
  def check_target(g, target):
    if not 0 <= target <= g.edge_count:
      raise SparsifierError("target %d outside [0, %d]"
                            % (target, g.edge_count))
