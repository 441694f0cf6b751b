"""Performance profiles and benchmark aggregates.

For a set of algorithms A and instances I, the performance profile of
algorithm a is P_a(tau) = |{i : cut_a(i) <= tau * min_b cut_b(i)}| / |I|.
Curves are kept as exact breakpoints (tau, P_a(tau)); P_a is a step function
that is constant between consecutive breakpoints.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import collections
import csv
import io
import json

from fractions import Fraction

import numpy as np
import six

from logzero import logger

CUTS_HEADER = ('algorithm', 'instance', 'cut')
PROFILE_HEADER = ('algorithm', 'tau', 'fraction')


def _open_text(target, mode):
  if isinstance(target, six.string_types):
    return io.open(target, mode, newline='' if six.PY3 else None), True
  return target, False


def read_cuts(source):
  """Reads an `algorithm,instance,cut` CSV file (path or text stream).

  Returns:
    A list of `(algorithm, instance, cut)` tuples with integer cuts.

  Raises:
    ValueError:  If the header is missing or a cut is not an integer.
  """
  stream, owned = _open_text(source, 'r')
  try:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != CUTS_HEADER:
      raise ValueError("expected header %s, got %r"
                       % (','.join(CUTS_HEADER), header))
    rows = []
    for line, record in enumerate(reader, 2):
      if not record:
        continue
      if len(record) != 3:
        raise ValueError("line %d: expected 3 fields, got %d"
                         % (line, len(record)))
      rows.append((record[0], record[1], int(record[2])))
    return rows
  finally:
    if owned:
      stream.close()


def write_cuts(rows, dest):
  stream, owned = _open_text(dest, 'w')
  try:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CUTS_HEADER)
    for algorithm, instance, cut in rows:
      writer.writerow((algorithm, instance, int(cut)))
  finally:
    if owned:
      stream.close()


def write_records(header, rows, dest):
  """Writes `rows` under `header` as CSV to a path or text stream.

  `Fraction` and float cells are written as floats.
  """
  stream, owned = _open_text(dest, 'w')
  try:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
      writer.writerow([repr(float(x)) if isinstance(x, (Fraction, float)) else x
                       for x in row])
  finally:
    if owned:
      stream.close()


def _cut_table(rows):
  table = collections.OrderedDict()
  for algorithm, instance, cut in rows:
    if cut < 0:
      raise ValueError("negative cut %r for %s on %s"
                       % (cut, algorithm, instance))
    key = (algorithm, instance)
    if key in table:
      raise ValueError("duplicate cut for %s on %s" % key)
    table[key] = cut
  algorithms = sorted(set(a for a, _ in table))
  instances = sorted(set(i for _, i in table))
  missing = [(a, i) for a in algorithms for i in instances
             if (a, i) not in table]
  if missing:
    raise ValueError("no cut for %s on %s" % missing[0])
  return table, algorithms, instances


class ProfileTable(object):
  """Performance profile curves of a cut table.

  Attributes:
    algorithms:  Sorted algorithm names.
    instances:  Sorted ids of the instances the profile is computed on.
    excluded:  Instances left out because their best cut is 0 while some
      algorithm's is not.
    cuts:  Dict `(algorithm, instance) -> cut` of the kept instances.
    curves:  Dict `algorithm -> [(tau, fraction), ...]` of `Fraction`
      breakpoints, ascending in tau.
  """

  def __init__(self, algorithms, instances, excluded, cuts, curves):
    self.algorithms = algorithms
    self.instances = instances
    self.excluded = excluded
    self.cuts = cuts
    self.curves = curves

  def fraction_at(self, algorithm, tau):
    """P_algorithm(tau)."""
    value = Fraction(0)
    for breakpoint, fraction in self.curves[algorithm]:
      if breakpoint > tau:
        break
      value = fraction
    return value

  def to_rows(self):
    return [(a, float(tau), float(fraction)) for a in self.algorithms
            for tau, fraction in self.curves[a]]

  def write_csv(self, dest):
    stream, owned = _open_text(dest, 'w')
    try:
      writer = csv.writer(stream, lineterminator='\n')
      writer.writerow(PROFILE_HEADER)
      for algorithm, tau, fraction in self.to_rows():
        writer.writerow((algorithm, repr(tau), repr(fraction)))
    finally:
      if owned:
        stream.close()

  def to_dict(self):
    return {
      'algorithms': self.algorithms,
      'instances': self.instances,
      'excluded': self.excluded,
      'curves': {a: [[float(t), float(f)] for t, f in self.curves[a]]
                 for a in self.algorithms},
    }

  def to_json(self):
    return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def performance_profile(rows):
  """Builds the `ProfileTable` of `(algorithm, instance, cut)` rows.

  Instances whose best cut is 0 count at tau = 1 for every algorithm if all
  algorithms reach 0; otherwise their ratios are undefined and the instance
  is excluded with a warning.

  Raises:
    ValueError:  If the table is empty, incomplete or has duplicates, or if
      every instance had to be excluded.
  """
  table, algorithms, instances = _cut_table(rows)
  if not table:
    raise ValueError("empty cut table")
  kept, excluded = [], []
  ratios = dict((a, []) for a in algorithms)
  for instance in instances:
    cuts = [table[a, instance] for a in algorithms]
    best = min(cuts)
    if best == 0 and max(cuts) > 0:
      excluded.append(instance)
      continue
    kept.append(instance)
    for a, cut in zip(algorithms, cuts):
      ratios[a].append(Fraction(cut, best) if best else Fraction(1))
  if excluded:
    logger.warning("performance_profile: excluding %d instance(s) with a zero "
                   "best cut: %s", len(excluded), ', '.join(excluded))
  if not kept:
    raise ValueError("no instance left after excluding zero cuts")

  curves = {}
  for a in algorithms:
    values = sorted(ratios[a])
    breakpoints = []
    for position, tau in enumerate(values):
      fraction = Fraction(position + 1, len(kept))
      if breakpoints and breakpoints[-1][0] == tau:
        breakpoints[-1] = (tau, fraction)
      else:
        breakpoints.append((tau, fraction))
    curves[a] = breakpoints
  cuts = dict(((a, i), table[a, i]) for a in algorithms for i in kept)
  return ProfileTable(algorithms, kept, excluded, cuts, curves)


def geometric_mean(values):
  """Geometric mean of positive numbers."""
  values = np.asarray(values, dtype=np.float64)
  if len(values) == 0:
    raise ValueError("geometric mean of nothing")
  if (values <= 0).any():
    raise ValueError("geometric mean needs positive values")
  return float(np.exp(np.log(values).mean()))


def relative_summary(rows, baseline):
  """Geometric mean of every algorithm's cut relative to `baseline`.

  Instances where both cuts are 0 count as ratio 1; instances where exactly
  one of them is 0 are skipped.

  Returns:
    Dict `algorithm -> geometric mean ratio`.
  """
  table, algorithms, instances = _cut_table(rows)
  if baseline not in algorithms:
    raise ValueError("baseline %r has no cuts" % (baseline,))
  summary = {}
  for a in algorithms:
    values = []
    for instance in instances:
      cut, reference = table[a, instance], table[baseline, instance]
      if cut == 0 or reference == 0:
        if cut == reference:
          values.append(1.0)
        continue
      values.append(cut / reference)
    summary[a] = geometric_mean(values) if values else float('nan')
  return summary


def hierarchy_size_ratio(stats, baseline_stats):
  """Sum of edges over all hierarchy levels relative to the baseline run.

  Accepts `RunStats` objects or their `to_dict()` documents.
  """
  def edges(s):
    return s['hierarchy_edges'] if isinstance(s, dict) else s.hierarchy_edges
  reference = edges(baseline_stats)
  if reference == 0:
    return 1.0 if edges(stats) == 0 else float('inf')
  return edges(stats) / reference
