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
import os
import time

import logzero

from logzero import logger

import utils
from analysis import performance_profile, write_cuts
from coarsening.sparsifiers import CLI_NAMES
from commands import bench


BASE_DIR = os.path.dirname(os.path.abspath(__file__))
args = None


def main():
  # Parse args and set up logger #
  ################################
  parse_args()
  setup_logger()
  logger.debug("Logger created and args parsed!")

  # Print the command line arguments the program ran with
  logger.info("Script location: %s" % __file__)
  logger.info("Parsed args: %s" % vars(args))

  # Run the sweep, one size at a time #
  #####################################
  results = []
  for exponent in args.sizes:
    suite = bench.instance_suite(2 ** exponent, args.instances, seed=args.seed)
    logger.info("Running %d instances with n=2^%d...", len(suite), exponent)
    results += bench.run_sweep(suite, args.methods,
                               range(args.seed, args.seed + args.seeds),
                               args.k, epsilon=args.epsilon,
                               threads=args.threads)

  # Write the cut table, its profile and the summary #
  ####################################################
  rows = bench.cut_rows(results)
  write_cuts(rows, os.path.join(args.save_to, 'cuts.csv'))
  performance_profile(rows).write_csv(
    os.path.join(args.save_to, 'profile.csv'))
  summary = bench.summarize(results)
  with io.open(os.path.join(args.save_to, 'summary.json'), 'w') as fp:
    fp.write(json.dumps(summary, indent=2, sort_keys=True))
  logger.info("Relative cuts: %s", summary.get('relative_cut'))
  logger.info("Results saved to %s", args.save_to)


def parse_args():
  """Parse the command line arguments"""
  parser = argparse.ArgumentParser(
    description="Compares the sparsification methods on generated graphs of "
                "growing size.")

  parser.add_argument("-n", "--name",
    type=str,
    default="%s" % time.strftime("sparsifier-benchmark_%Y%m%d_%H%M%S"),
    help="The name of the experiment being run. Will by default be named "
         "based on the current time.")
  parser.add_argument("-v", "--verbosity", metavar="LEVEL",
    type=str.upper,
    nargs='?',
    default="INFO", const="DEBUG",
    choices=("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"),
    help="Sets the console logger verbosity. Note that all logger messages "
         "will still be written to the logfile. Specifying this flag without "
         "a level will set the verbosity to DEBUG. (default: %(default)s) "
         "(choices: %(choices)s)")
  parser.add_argument("--sizes", metavar="LOG2N",
    type=utils.pos_int,
    nargs='+',
    default=[12, 14],
    help="Instance sizes as powers of two. (default: %(default)s)")
  parser.add_argument("--instances", metavar="KIND",
    nargs='+',
    default=list(bench.SUITE_KINDS),
    choices=bench.SUITE_KINDS,
    help="Instance families. (choices: %(choices)s)")
  parser.add_argument("--methods", metavar="METHOD",
    nargs='+',
    default=sorted(CLI_NAMES),
    choices=sorted(CLI_NAMES),
    help="Sparsification methods. (choices: %(choices)s)")
  parser.add_argument("--k", metavar="K",
    type=utils.pos_int,
    default=16,
    help="The number of blocks. (default: %(default)d)")
  parser.add_argument("--epsilon", metavar="EPS",
    type=utils.nonneg_float,
    default=0.03,
    help="Allowed imbalance. (default: %(default)s)")
  parser.add_argument("--seeds", metavar="N",
    type=utils.pos_int,
    default=3,
    help="Seeds per instance. (default: %(default)d)")
  parser.add_argument("--seed",
    type=int,
    default=1,
    help="The first seed. (default: %(default)d)")
  parser.add_argument("--threads", metavar="N",
    type=utils.pos_int,
    default=utils.num_cores(),
    help="Worker processes. By default, the number of available CPU cores. "
         "(default: %(default)d)")

  global args
  args = parser.parse_args()

  args.save_to = os.path.join(BASE_DIR, args.name)


def setup_logger():
  """Set up the logger"""
  if not os.path.exists(args.save_to):
    os.mkdir(args.save_to)

  # Set up the logfile
  logzero.logfile(
    filename=os.path.join(args.save_to, 'log.txt'),
    mode='w',
    loglevel=logging.DEBUG)  # Logfile always uses most verbose option.
  # Set the console's stderr to use the defined verbosity
  logger.handlers[0].setLevel(args.verbosity)


if __name__ == "__main__":
  main()
