"""The `linpart` command line.

Sub-commands:
  partition  partition a METIS graph into k blocks
  gen        generate a random graph in METIS format
  analyze    cut/imbalance, modularity or edge-reduction numbers of a graph
  profile    performance profile of an `algorithm,instance,cut` table
  bench      sweep sparsifiers over generated instances

Results go to files or stdout; logs go to stderr. Exit status is 1 for bad
flags and unreadable or malformed input, 2 when `partition` could not meet
the balance constraint, and 0 otherwise.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import argparse
import io
import json
import logging
import sys

import logzero
import numpy as np

from logzero import logger

import utils
from analysis import (cut, edge_reduction_study, imbalance, modularity_report,
                      performance_profile, read_cuts, reduction_to_dict,
                      write_cuts, write_records, write_reduction_csv)
from coarsening import Clustering, ClusteringParams, SparsifyConfig
from coarsening.sparsifiers import CLI_NAMES
from graphs import GeneratorSpec, generate, ground_truth, read_metis
from graphs import write_metis
from graphs.generators import (CHUNG_LU, ERDOS_RENYI, PATH, PLANTED_PARTITION,
                               STAR)
from partitioning import (EPSILON_SPLITS, BalanceSpec, Partition,
                          PartitionerConfig, partition)
from . import bench

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2

GEN_TYPES = utils.ReadOnlyDict({
  'er': ERDOS_RENYI,
  'planted': PLANTED_PARTITION,
  'chung-lu': CHUNG_LU,
  'path': PATH,
  'star': STAR,
})


class ArgumentParser(argparse.ArgumentParser):
  """An `argparse.ArgumentParser` that exits with status 1 on bad flags."""

  def error(self, message):
    self.print_usage(sys.stderr)
    self.exit(EXIT_ERROR, "%s: error: %s\n" % (self.prog, message))


def main(argv=None):
  # Parse args and set up logger #
  ################################
  args = parse_args(argv)
  setup_logger(args)
  logger.debug("Parsed args: %s", vars(args))
  try:
    return args.func(args)
  except (IOError, OSError, ValueError) as e:
    # GraphError, MetisFormatError, GeneratorError and SparsifierError are
    # all ValueErrors
    logger.error("%s: %s", type(e).__name__, e)
    return EXIT_ERROR


def _format_bool(value):
  return 'true' if value else 'false'


def _write_lines(path, values):
  with io.open(path, 'w', newline='\n') as fp:
    for value in values:
      fp.write("%d\n" % value)


def _write_text(path, text):
  if path is None:
    sys.stdout.write(text + "\n")
    return
  with io.open(path, 'w', newline='\n') as fp:
    fp.write(text + "\n")


def read_assignment(path, node_count):
  """Reads a file of one non-negative integer per line.

  Raises:
    ValueError:  If the line count differs from `node_count` or a line is not
      a non-negative integer.
  """
  with io.open(path, 'r') as fp:
    values = [line.strip() for line in fp if line.strip()]
  if len(values) != node_count:
    raise ValueError("%s has %d entries, graph has %d nodes"
                     % (path, len(values), node_count))
  assignment = np.asarray([int(v) for v in values], dtype=np.int64)
  if len(assignment) and assignment.min() < 0:
    raise ValueError("%s contains a negative id" % path)
  return assignment


def cmd_partition(args):
  g = read_metis(args.graph)
  sparsify = SparsifyConfig(method=args.sparsifier, tau_e=args.tau_e,
                            tau_d=args.tau_d, rho=args.rho, ff_p=args.ff_p,
                            ff_nu=args.ff_nu, seed=args.seed)
  cfg = PartitionerConfig(args.k, epsilon=args.epsilon, sparsify=sparsify,
                          clustering=ClusteringParams(1, args.rounds),
                          refine_rounds=args.rounds,
                          epsilon_split=args.epsilon_split, seed=args.seed)
  logger.info("Partitioning %s (n=%d, m=%d) into %d blocks", args.graph,
              g.node_count, g.edge_count, args.k)
  p, stats = partition(g, cfg)
  if args.out:
    _write_lines(args.out, p.assignment.tolist())
  if args.stats:
    _write_text(args.stats, stats.to_json(include_timings=args.timings))
  print("cut=%d imbalance=%r feasible=%s"
        % (stats.cut, float(stats.imbalance), _format_bool(stats.feasible)))
  return EXIT_OK if stats.feasible else EXIT_INFEASIBLE


def cmd_gen(args):
  spec = GeneratorSpec(GEN_TYPES[args.type], args.n, p=args.p,
                       edge_count=args.m, blocks=args.blocks, p_in=args.p_in,
                       p_out=args.p_out, avg_degree=args.avg_degree,
                       exponent=args.exponent, seed=args.seed)
  g = generate(spec)
  write_metis(g, args.out)
  logger.info("Wrote %s (n=%d, m=%d)", args.out, g.node_count, g.edge_count)
  if spec.kind == PLANTED_PARTITION:
    _write_lines(args.out + '.truth', ground_truth(spec).tolist())
  return EXIT_OK


def cmd_analyze(args):
  g = read_metis(args.graph)
  if args.mode == 'metrics':
    if not args.partition:
      raise ValueError("--mode metrics needs --partition")
    assignment = read_assignment(args.partition, g.node_count)
    k = args.k or (int(assignment.max()) + 1 if len(assignment) else 1)
    p = Partition.from_assignment(assignment, g.node_weights, k)
    balance = BalanceSpec(args.epsilon, k, g.total_node_weight)
    report = imbalance(g, p, balance)
    doc = {
      'cut': cut(g, p),
      'k': k,
      'max_block_weight': report.max_block_weight,
      'imbalance': report.ratio,
      'feasible': report.feasible,
      'block_weights': p.block_weights.tolist(),
    }
  else:
    clustering = None
    source = args.clustering or args.partition
    if source:
      clustering = Clustering.from_labels(
        read_assignment(source, g.node_count), g.node_weights)
    if args.mode == 'modularity':
      if clustering is None:
        raise ValueError("--mode modularity needs --clustering")
      record = modularity_report(g, clustering, weighted=args.weighted)
      doc = record.to_dict()
    else:
      limit = args.max_cluster_weight or PartitionerConfig(
        args.k or 1).max_cluster_weight(g.total_node_weight)
      params = ClusteringParams(limit, seed=args.seed)
      record = edge_reduction_study(g, params, clustering)
      doc = reduction_to_dict(record)
  if args.format == 'json':
    _write_text(args.out, json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK
  dest = args.out or sys.stdout
  if args.mode == 'metrics':
    header = ['cut', 'k', 'max_block_weight', 'imbalance', 'feasible',
              'block_weights']
    row = [doc[name] for name in header[:-1]]
    row.append(' '.join(str(w) for w in doc['block_weights']))
    write_records(header, [row], dest)
  elif args.mode == 'modularity':
    record.write_csv(dest)
  else:
    write_reduction_csv(record, dest)
  return EXIT_OK


def cmd_profile(args):
  table = performance_profile(read_cuts(args.cuts))
  if args.out:
    table.write_csv(args.out)
  else:
    table.write_csv(sys.stdout)
  if args.json:
    _write_text(args.json, table.to_json())
  return EXIT_OK


def cmd_bench(args):
  suite = bench.instance_suite(args.n, args.instances, seed=args.seed)
  seeds = range(args.seed, args.seed + args.seeds)
  results = bench.run_sweep(suite, args.methods, seeds, args.k,
                            epsilon=args.epsilon, threads=args.threads)
  write_cuts(bench.cut_rows(results), args.cuts)
  if args.summary:
    _write_text(args.summary,
                json.dumps(bench.summarize(results), indent=2, sort_keys=True))
  return EXIT_OK


def _add_common(parser):
  parser.add_argument("-v", "--verbosity", metavar="LEVEL",
    type=str.upper,
    nargs='?',
    default="WARNING", const="DEBUG",
    choices=("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"),
    help="Sets the console logger verbosity. Specifying this flag without a "
         "level will set the verbosity to DEBUG. (default: %(default)s) "
         "(choices: %(choices)s)")
  parser.add_argument("--logfile", metavar="PATH",
    type=str,
    help="Also write every log message, including DEBUG, to this file.")


def _add_seed(parser):
  parser.add_argument("--seed", metavar="N",
    type=int,
    default=1,
    help="Sets the random seed. (default: %(default)d)")


def parse_args(argv=None):
  """Parse the command line arguments"""
  parser = ArgumentParser(
    prog="linpart",
    description="Linear-work multilevel graph partitioning with "
                "sparsification.")
  subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
  subparsers.required = True

  # partition #
  #############
  p = subparsers.add_parser("partition",
    help="Partition a METIS graph into k blocks.")
  _add_common(p)
  p.add_argument("--graph", metavar="PATH",
    type=utils.existing_path,
    required=True,
    help="The input graph in METIS format.")
  p.add_argument("--k", metavar="K",
    type=utils.pos_int,
    required=True,
    help="The number of blocks.")
  p.add_argument("--epsilon", metavar="EPS",
    type=utils.nonneg_float,
    default=0.03,
    help="Allowed imbalance; every block may weigh at most "
         "(1+EPS)*ceil(c(V)/k). (default: %(default)s)")
  p.add_argument("--sparsifier", metavar="METHOD",
    default="t-weight",
    choices=sorted(CLI_NAMES),
    help="Edge sparsification method used during coarsening. "
         "(default: %(default)s) (choices: %(choices)s)")
  p.add_argument("--tau-e", metavar="X",
    type=utils.probability,
    default=0.5,
    help="Edge threshold: a coarse level keeps at most X times the edges of "
         "the finer one. (default: %(default)s)")
  p.add_argument("--tau-d", metavar="X",
    type=utils.pos_float,
    default=0.5,
    help="Density threshold: a coarse level's average degree is at most X "
         "times the finer one's. (default: %(default)s)")
  p.add_argument("--rho", metavar="X",
    type=utils.pos_float,
    default=4,
    help="Sparsify only when a coarse level has more than X times its edge "
         "target. (default: %(default)s)")
  p.add_argument("--ff-p", metavar="P",
    type=utils.probability,
    default=0.6,
    help="Forest Fire stop probability. (default: %(default)s)")
  p.add_argument("--ff-nu", metavar="X",
    type=utils.pos_float,
    default=0.5,
    help="Forest Fire burns until X times the edge count edges burned. "
         "(default: %(default)s)")
  _add_seed(p)
  p.add_argument("--rounds", metavar="N",
    type=utils.pos_int,
    default=5,
    help="Label propagation rounds for clustering and refinement. "
         "(default: %(default)d)")
  p.add_argument("--epsilon-split", metavar="RULE",
    default="adaptive",
    choices=EPSILON_SPLITS,
    help="How recursive bipartitioning spreads the imbalance over its "
         "levels. (default: %(default)s) (choices: %(choices)s)")
  p.add_argument("--out", metavar="PATH",
    type=str,
    help="Writes the partition here, one 0-based block id per line.")
  p.add_argument("--stats", metavar="PATH",
    type=str,
    help="Writes the run statistics here as JSON.")
  p.add_argument("--timings",
    action="store_true",
    help="Include per-phase wall-clock timings in the statistics. Timings "
         "make the statistics file differ between otherwise identical runs.")
  p.set_defaults(func=cmd_partition)

  # gen #
  #######
  p = subparsers.add_parser("gen", help="Generate a random graph.")
  _add_common(p)
  p.add_argument("--type", metavar="TYPE",
    required=True,
    choices=sorted(GEN_TYPES),
    help="The graph family. (choices: %(choices)s)")
  p.add_argument("--n", metavar="N",
    type=utils.nonneg_int,
    required=True,
    help="The number of nodes.")
  p.add_argument("--p", metavar="P",
    type=utils.probability,
    help="Edge probability of an Erdos-Renyi graph.")
  p.add_argument("--m", metavar="M",
    type=utils.nonneg_int,
    help="Expected edge count of an Erdos-Renyi graph, instead of --p.")
  p.add_argument("--blocks", metavar="B",
    type=utils.pos_int,
    help="Number of planted blocks.")
  p.add_argument("--p-in", metavar="P",
    type=utils.probability,
    help="Intra-block edge probability of a planted partition graph.")
  p.add_argument("--p-out", metavar="P",
    type=utils.probability,
    help="Inter-block edge probability of a planted partition graph.")
  p.add_argument("--avg-degree", metavar="D",
    type=utils.pos_float,
    help="Expected average degree of a Chung-Lu graph.")
  p.add_argument("--exponent", metavar="X",
    type=utils.pos_float,
    default=2.5,
    help="Power-law exponent of a Chung-Lu graph. (default: %(default)s)")
  _add_seed(p)
  p.add_argument("--out", metavar="PATH",
    type=str,
    required=True,
    help="Writes the graph here. Planted partition graphs also get their "
         "ground truth in PATH.truth.")
  p.set_defaults(func=cmd_gen)

  # analyze #
  ###########
  p = subparsers.add_parser("analyze",
    help="Report cut and balance, modularity or edge reduction.")
  _add_common(p)
  p.add_argument("--graph", metavar="PATH",
    type=utils.existing_path,
    required=True,
    help="The graph in METIS format.")
  p.add_argument("--mode", metavar="MODE",
    default="metrics",
    choices=("metrics", "modularity", "reduction"),
    help="What to report. (default: %(default)s) (choices: %(choices)s)")
  p.add_argument("--partition", metavar="PATH",
    type=utils.existing_path,
    help="A partition file, one block id per line.")
  p.add_argument("--clustering", metavar="PATH",
    type=utils.existing_path,
    help="A clustering file, one cluster id per line. For the reduction mode "
         "it replaces the coarsening clustering.")
  p.add_argument("--k", metavar="K",
    type=utils.pos_int,
    help="Number of blocks. Defaults to the largest block id plus one; in the "
         "reduction mode it sets the weight limit c(V)/(160k).")
  p.add_argument("--epsilon", metavar="EPS",
    type=utils.nonneg_float,
    default=0.03,
    help="Allowed imbalance. (default: %(default)s)")
  p.add_argument("--weighted",
    action="store_true",
    help="Count edge weights instead of edges in the modularity report.")
  p.add_argument("--max-cluster-weight", metavar="U",
    type=utils.pos_int,
    help="Cluster weight limit of the reduction mode.")
  p.add_argument("--format", metavar="FORMAT",
    default="json",
    choices=("json", "csv"),
    help="Report format. CSV reports are a header and one row. "
         "(default: %(default)s) (choices: %(choices)s)")
  _add_seed(p)
  p.add_argument("--out", metavar="PATH",
    type=str,
    help="Writes the report here instead of to stdout.")
  p.set_defaults(func=cmd_analyze)

  # profile #
  ###########
  p = subparsers.add_parser("profile",
    help="Performance profile of an algorithm,instance,cut CSV table.")
  _add_common(p)
  p.add_argument("--cuts", metavar="PATH",
    type=utils.existing_path,
    required=True,
    help="CSV file with the header algorithm,instance,cut.")
  p.add_argument("--out", metavar="PATH",
    type=str,
    help="Writes the algorithm,tau,fraction breakpoints here instead of to "
         "stdout.")
  p.add_argument("--json", metavar="PATH",
    type=str,
    help="Also writes the profile as JSON.")
  p.set_defaults(func=cmd_profile)

  # bench #
  #########
  p = subparsers.add_parser("bench",
    help="Sweep sparsification methods over generated instances.")
  _add_common(p)
  p.add_argument("--n", metavar="N",
    type=utils.pos_int,
    default=4096,
    help="Number of nodes of every instance. (default: %(default)d)")
  p.add_argument("--instances", metavar="KIND",
    nargs='+',
    default=list(bench.SUITE_KINDS),
    choices=bench.SUITE_KINDS,
    help="Instance families. (default: all) (choices: %(choices)s)")
  p.add_argument("--methods", metavar="METHOD",
    nargs='+',
    default=sorted(CLI_NAMES),
    choices=sorted(CLI_NAMES),
    help="Sparsification methods. (default: all) (choices: %(choices)s)")
  p.add_argument("--k", metavar="K",
    type=utils.pos_int,
    default=8,
    help="The number of blocks. (default: %(default)d)")
  p.add_argument("--epsilon", metavar="EPS",
    type=utils.nonneg_float,
    default=0.03,
    help="Allowed imbalance. (default: %(default)s)")
  p.add_argument("--seeds", metavar="N",
    type=utils.pos_int,
    default=3,
    help="Number of seeds per instance, starting at --seed. "
         "(default: %(default)d)")
  _add_seed(p)
  p.add_argument("--threads", metavar="N",
    type=utils.pos_int,
    default=1,
    help="Worker processes running independent partitioner calls. Each call "
         "is sequential, so results do not depend on this. "
         "(default: %(default)d)")
  p.add_argument("--cuts", metavar="PATH",
    type=str,
    required=True,
    help="Writes the algorithm,instance,cut table here.")
  p.add_argument("--summary", metavar="PATH",
    type=str,
    help="Writes cuts and hierarchy sizes relative to 'none' here as JSON.")
  p.set_defaults(func=cmd_bench)

  return parser.parse_args(argv)


def setup_logger(args):
  """Set up the logger"""
  # Set the console's stderr to use the defined verbosity
  logger.handlers[0].setLevel(args.verbosity)
  if args.logfile:
    # Logfile always uses most verbose option.
    logzero.logfile(filename=args.logfile, mode='w', loglevel=logging.DEBUG)


if __name__ == "__main__":
  sys.exit(main())
