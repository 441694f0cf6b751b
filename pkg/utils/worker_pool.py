"""A synchronous pool of worker subprocesses.

Originally inspired by the code here:
https://github.com/MG2033/A2C/blob/master/envs/subproc_vec_env.py. It has since
evolved heavily, but we provide the original link as an acknowledgement.
"""

# Python 2-3 Compatibility
from __future__ import absolute_import
from __future__ import print_function
from __future__ import unicode_literals
from __future__ import division
from six.moves import range, zip

import multiprocessing
import traceback

from multiprocessing import Process, Pipe
from logzero import logger


def num_cores():
  """Returns the number of CPU cores detected."""
  return multiprocessing.cpu_count()


class WorkerError(RuntimeError):
  """Raised in the parent when a job failed inside a worker process."""


def worker(parent_end, worker_end):
  """Entry point for the worker subprocess.

  Args:
    parent_end:  The parent's end of the pipe.
    worker_end:  The worker's end of the pipe.
  """
  pipe = worker_end
  del worker_end

  # Child processes inherit parent file descriptors, regardless of whether we
  # explicitly pass the parent end of the pipe or not. By passing the parent's
  # end, we can close our handle on the file descriptor, meaning that once the
  # parent does the same, we can detect that the pipe has been closed.
  parent_end.close()
  del parent_end

  try:
    while True:
      cmd, data = pipe.recv()
      if cmd == 'run':
        fn, args = data
        try:
          pipe.send((True, fn(*args)))
        except Exception:
          pipe.send((False, traceback.format_exc()))
      elif cmd == 'close':
        break
      else:
        raise NotImplementedError(cmd)
  except EOFError:
    pass
  finally:
    pipe.close()


class WorkerPool(object):
  """Runs picklable module-level functions in a fixed set of subprocesses.

  Jobs are dispatched in synchronous rounds of `num_workers`, so results come
  back in submission order regardless of which worker finished first."""

  def __init__(self, num_workers=None):
    """Starts the worker processes.

    Args:
      num_workers:  How many subprocesses to start. If `None`, uses the number
        of CPU cores.
    """
    if num_workers is None:
      num_workers = num_cores()
    if num_workers < 1:
      raise ValueError("`num_workers` must be positive, got %r" % num_workers)
    logger.debug("Constructing `WorkerPool` with %d workers", num_workers)
    self._num_workers = num_workers
    self._parent_ends, self._worker_ends = zip(
      *[Pipe() for _ in range(num_workers)])

    self._ps = [
      Process(target=worker, args=(parent_end, worker_end))
      for (parent_end, worker_end)
      in zip(self._parent_ends, self._worker_ends)]

    for p, worker_end in zip(self._ps, self._worker_ends):
      # Causes parent to kill children on exit. NOT the same as unix daemon.
      p.daemon = True
      p.start()
      # Once worker end is given to worker process, close the parent's copy
      worker_end.close()

  def map(self, fn, arg_tuples):
    """Applies `fn` to every argument tuple.

    Args:
      fn:  A module-level (picklable) function.
      arg_tuples:  A sequence of tuples, each unpacked into one call of `fn`.

    Returns:
      A list of results, in the order of `arg_tuples`.

    Raises:
      WorkerError:  If any call raised inside a worker.
    """
    if self._ps is None:
      raise RuntimeError("`WorkerPool` is closed")
    arg_tuples = list(arg_tuples)
    results = []
    for start in range(0, len(arg_tuples), self._num_workers):
      batch = arg_tuples[start:start + self._num_workers]
      for pipe, args in zip(self._parent_ends, batch):
        pipe.send(('run', (fn, tuple(args))))
      # drain the whole batch so every pipe is idle before raising
      replies = [pipe.recv() for pipe, _ in zip(self._parent_ends, batch)]
      for ok, value in replies:
        if not ok:
          raise WorkerError(value)
        results.append(value)
      logger.debug("Finished %d/%d jobs", len(results), len(arg_tuples))
    return results

  def close(self):
    """Shuts down the workers and their processes."""
    if self._ps is None:
      return
    logger.debug("Stopping workers...")
    for pipe in self._parent_ends:
      pipe.send(('close', None))
    for p, parent_end in zip(self._ps, self._parent_ends):
      p.join()
      parent_end.close()
    self._parent_ends = self._worker_ends = self._ps = None

  def __enter__(self):
    return self

  def __exit__(self, *exc_info):
    self.close()
    return False

  @property
  def num_workers(self):
    return self._num_workers
