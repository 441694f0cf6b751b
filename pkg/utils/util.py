# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import argparse
import os.path

__all__ = [
  "ReadOnlyDict", "pos_int", "nonneg_int", "probability", "pos_float",
  "nonneg_float", "existing_path", "ceil_div"]


class ReadOnlyDict(dict):
  """Provides a read-only version of a python dict."""

  def __readonly__(self, *args, **kwargs):
    raise RuntimeError("Cannot modify `ReadOnlyDict`")

  __setitem__ = __readonly__
  __delitem__ = __readonly__
  pop = __readonly__
  popitem = __readonly__
  clear = __readonly__
  update = __readonly__
  setdefault = __readonly__
  del __readonly__


def pos_int(value):
  """argparse type for strictly positive integers."""
  ival = int(value)
  if ival <= 0:
    raise argparse.ArgumentTypeError("%s is not a positive integer" % value)
  return ival


def nonneg_int(value):
  """argparse type for integers >= 0."""
  ival = int(value)
  if ival < 0:
    raise argparse.ArgumentTypeError("%s is not a non-negative integer" % value)
  return ival


def probability(value):
  """argparse type for floats in [0, 1]."""
  fval = float(value)
  if not 0.0 <= fval <= 1.0:
    raise argparse.ArgumentTypeError("%s is not a probability" % value)
  return fval


def pos_float(value):
  """argparse type for strictly positive floats."""
  fval = float(value)
  if fval <= 0.0:
    raise argparse.ArgumentTypeError("%s is not a positive number" % value)
  return fval


def nonneg_float(value):
  """argparse type for floats >= 0."""
  fval = float(value)
  if fval < 0.0:
    raise argparse.ArgumentTypeError("%s is not a non-negative number" % value)
  return fval


def existing_path(value):
  """argparse type for paths that must already exist."""
  if not os.path.exists(value):
    raise argparse.ArgumentTypeError("The file %s does not exist!" % value)
  return value


def ceil_div(a, b):
  """Integer ceiling of `a / b` for non-negative ints."""
  return -(-a // b)
