"""Reading and writing graphs in the METIS graph format.

A METIS file has a header line `n m [fmt [ncon]]` followed by one line per
node (1-indexed) listing its neighbors. The `fmt` flag is a string of up to
three binary digits; from the right they select edge weights, node weights and
node sizes. With node weights each node line starts with the weight; with edge
weights every neighbor id is followed by the edge weight. Lines starting with
'%' are comments and do not count as node lines.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import io

import numpy as np
import six

from logzero import logger

from .graph import Graph, GraphError, from_directed_entries


class MetisFormatError(GraphError):
  """Raised for input that is not a well-formed METIS graph."""


def _read_text(source):
  if isinstance(source, six.string_types):
    with io.open(source, 'rb') as fp:
      data = fp.read()
  else:
    data = source.read()
  if isinstance(data, bytes):
    data = data.decode('ascii')
  return data


def _parse_header(line):
  tokens = line.split()
  if not 2 <= len(tokens) <= 4:
    raise MetisFormatError("malformed header %r" % line)
  try:
    n, m = int(tokens[0]), int(tokens[1])
  except ValueError:
    raise MetisFormatError("malformed header %r" % line)
  if n < 0 or m < 0:
    raise MetisFormatError("negative counts in header %r" % line)
  fmt = tokens[2] if len(tokens) > 2 else '0'
  if len(fmt) > 3 or any(c not in '01' for c in fmt):
    raise MetisFormatError("invalid fmt flag %r" % fmt)
  fmt = fmt.zfill(3)
  if fmt[0] == '1':
    raise MetisFormatError("node sizes (fmt=%s) are not supported" % fmt)
  has_edge_weights = fmt[2] == '1'
  has_node_weights = fmt[1] == '1'
  if len(tokens) > 3:
    try:
      ncon = int(tokens[3])
    except ValueError:
      raise MetisFormatError("malformed header %r" % line)
    if ncon != 1 or not has_node_weights:
      raise MetisFormatError(
        "only a single node weight per node is supported (ncon=%d)" % ncon)
  return n, m, has_edge_weights, has_node_weights


def read_metis(source):
  """Reads a graph in METIS format.

  Args:
    source:  A path, or a file-like object yielding text or bytes.

  Returns:
    The `Graph`, with 0-based node ids and weights defaulted to 1.

  Raises:
    MetisFormatError:  On a malformed header, a missing or superfluous node
      line, weight flags that do not match the line contents, out-of-range
      ids, or an asymmetric adjacency.
  """
  lines = [l for l in _read_text(source).splitlines()
           if not l.lstrip().startswith('%')]
  if not lines:
    raise MetisFormatError("missing header")
  n, m, has_edge_weights, has_node_weights = _parse_header(lines[0])
  node_lines = lines[1:]
  if len(node_lines) < n:
    raise MetisFormatError("expected %d node lines, found %d"
                           % (n, len(node_lines)))
  if any(l.strip() for l in node_lines[n:]):
    raise MetisFormatError("more than %d node lines" % n)

  node_weights = np.ones(n, dtype=np.int64)
  tails, heads, weights = [], [], []
  for u in range(n):
    try:
      tokens = [int(t) for t in node_lines[u].split()]
    except ValueError:
      raise MetisFormatError("non-integer token on line of node %d" % (u + 1))
    if has_node_weights:
      if not tokens:
        raise MetisFormatError("node %d is missing its weight" % (u + 1))
      node_weights[u] = tokens[0]
      tokens = tokens[1:]
    if has_edge_weights:
      if len(tokens) % 2:
        raise MetisFormatError(
          "node %d: odd token count although fmt declares edge weights"
          % (u + 1))
      nbrs, wgts = tokens[0::2], tokens[1::2]
    else:
      nbrs, wgts = tokens, [1] * len(tokens)
    tails.extend([u] * len(nbrs))
    heads.extend(nbrs)
    weights.extend(wgts)

  heads = np.asarray(heads, dtype=np.int64) - 1
  if len(heads) != 2 * m:
    raise MetisFormatError("header declares %d edges, found %d adjacency "
                           "entries" % (m, len(heads)))
  if len(heads) and (heads.min() < 0 or heads.max() >= n):
    raise MetisFormatError("neighbor id out of range [1, %d]" % n)
  try:
    g = from_directed_entries(n, tails, heads, weights, node_weights,
                              validate=True)
  except GraphError as e:
    raise MetisFormatError(str(e))
  logger.debug("Read METIS graph with n=%d m=%d", g.node_count, g.edge_count)
  return g


def format_metis(g):
  """Renders `g` as METIS text.

  The fmt flag is emitted only for the weights that differ from 1, so
  unweighted graphs produce the plain two-field header.
  """
  edge_weighted = bool(np.any(g.adjwgt != 1))
  node_weighted = bool(np.any(g.node_weights != 1))
  header = "%d %d" % (g.node_count, g.edge_count)
  if edge_weighted or node_weighted:
    header += " %d%d" % (int(node_weighted), int(edge_weighted))
  out = [header]
  xadj = g.xadj.tolist()
  adjncy = (g.adjncy + 1).tolist()
  adjwgt = g.adjwgt.tolist()
  node_weights = g.node_weights.tolist()
  for u in range(g.node_count):
    fields = [node_weights[u]] if node_weighted else []
    for i in range(xadj[u], xadj[u + 1]):
      fields.append(adjncy[i])
      if edge_weighted:
        fields.append(adjwgt[i])
    out.append(" ".join(str(f) for f in fields))
  return "\n".join(out) + "\n"


def write_metis(g, dest):
  """Writes `g` in METIS format.

  Args:
    g:  The `Graph`.
    dest:  A path, or a text-mode file-like object.
  """
  text = format_metis(g)
  if isinstance(dest, six.string_types):
    with io.open(dest, 'w', newline='\n') as fp:
      fp.write(text)
  else:
    dest.write(text)
