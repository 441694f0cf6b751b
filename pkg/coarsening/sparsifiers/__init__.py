from __future__ import absolute_import

from .sparsifier import *
from .uniform import UniformSampler
from .uniform import uniform_sample
from .threshold import ThresholdSelection
from .threshold import WeightThresholdSampler
from .threshold import kth_largest
from .threshold import threshold_sample
from .threshold import weight_threshold_select
from .forest_fire import ForestFireSampler
from .forest_fire import forest_fire_scores


def make_sparsifier(cfg):
  """Builds the `Sparsifier` selected by `cfg.method`, or `None` for 'none'."""
  cfg.validate()
  if cfg.method == NONE:
    return None
  if cfg.method == UNIFORM:
    return UniformSampler(cfg)
  if cfg.method == THRESHOLD_WEIGHT:
    return WeightThresholdSampler(cfg)
  if cfg.method == THRESHOLD_FF:
    return ForestFireSampler(cfg, weighted=False)
  if cfg.method == THRESHOLD_WFF:
    return ForestFireSampler(cfg, weighted=True)
  raise SparsifierError("unknown sparsification method %r" % (cfg.method,))


def sparsify(g, target, cfg, level=0):
  """Samples `g` down to `target` edges in expectation with `cfg.method`.

  Args:
    g:  The `Graph`.
    target:  m̂.
    cfg:  `SparsifyConfig`.
    level:  Hierarchy level used to salt the randomness.

  Returns:
    The sparsified `Graph` (`g` itself for method 'none').
  """
  sparsifier = make_sparsifier(cfg)
  if sparsifier is None:
    return g
  return sparsifier.sample(g, target, level)
