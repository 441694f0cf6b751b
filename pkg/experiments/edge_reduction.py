# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import argparse
import csv
import io
import logging
import os
import time

import logzero
import six

from logzero import logger

import utils
from analysis import edge_reduction_study, reduction_to_dict
from coarsening import ClusteringParams
from commands import bench
from graphs import GeneratorSpec, generate
from partitioning import PartitionerConfig


BASE_DIR = os.path.dirname(os.path.abspath(__file__))
FIELDS = ('instance', 'n', 'm', 'cluster_count', 'remaining_weight_fraction',
          'remaining_edge_fraction', 'q_c', 'bound_1_minus_qc')
args = None


def main():
  # Parse args and set up logger #
  ################################
  parse_args()
  setup_logger()
  logger.debug("Logger created and args parsed!")

  logger.info("Script location: %s" % __file__)
  logger.info("Parsed args: %s" % vars(args))

  # One coarsening step per instance #
  ####################################
  rows = []
  for exponent in args.sizes:
    suite = bench.instance_suite(2 ** exponent, args.instances, seed=args.seed)
    for instance, spec_dict in suite.items():
      g = generate(GeneratorSpec(**spec_dict))
      if g.edge_count == 0:
        logger.warning("Skipping edgeless instance %s", instance)
        continue
      limit = PartitionerConfig(args.k).max_cluster_weight(
        g.total_node_weight)
      record = reduction_to_dict(edge_reduction_study(
        g, ClusteringParams(limit, seed=args.seed)))
      record.update(instance=instance, n=g.node_count, m=g.edge_count)
      logger.info("%s: %.3f of the edges remain (1 - Q_C = %.3f)", instance,
                  record['remaining_edge_fraction'],
                  record['bound_1_minus_qc'])
      rows.append(record)

  path = os.path.join(args.save_to, 'edge_reduction.csv')
  with io.open(path, 'w', newline='' if six.PY3 else None) as fp:
    writer = csv.DictWriter(fp, FIELDS, lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
  logger.info("Results saved to %s", path)


def parse_args():
  """Parse the command line arguments"""
  parser = argparse.ArgumentParser(
    description="Measures how many edges and how much edge weight survive one "
                "coarsening step, next to the modularity of the clustering.")

  parser.add_argument("-n", "--name",
    type=str,
    default="%s" % time.strftime("edge-reduction_%Y%m%d_%H%M%S"),
    help="The name of the experiment being run. Will by default be named "
         "based on the current time.")
  parser.add_argument("-v", "--verbosity", metavar="LEVEL",
    type=str.upper,
    nargs='?',
    default="INFO", const="DEBUG",
    choices=("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"),
    help="Sets the console logger verbosity. Note that all logger messages "
         "will still be written to the logfile. (default: %(default)s) "
         "(choices: %(choices)s)")
  parser.add_argument("--sizes", metavar="LOG2N",
    type=utils.pos_int,
    nargs='+',
    default=[14],
    help="Instance sizes as powers of two. (default: %(default)s)")
  parser.add_argument("--instances", metavar="KIND",
    nargs='+',
    default=list(bench.SUITE_KINDS),
    choices=bench.SUITE_KINDS,
    help="Instance families. (choices: %(choices)s)")
  parser.add_argument("--k", metavar="K",
    type=utils.pos_int,
    default=16,
    help="Sets the cluster weight limit c(V)/(160k). (default: %(default)d)")
  parser.add_argument("--seed",
    type=int,
    default=1,
    help="Sets the random seed. (default: %(default)d)")

  global args
  args = parser.parse_args()

  args.save_to = os.path.join(BASE_DIR, args.name)


def setup_logger():
  """Set up the logger"""
  if not os.path.exists(args.save_to):
    os.mkdir(args.save_to)

  logzero.logfile(
    filename=os.path.join(args.save_to, 'log.txt'),
    mode='w',
    loglevel=logging.DEBUG)
  logger.handlers[0].setLevel(args.verbosity)


if __name__ == "__main__":
  main()
