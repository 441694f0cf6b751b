from __future__ import absolute_import

from .util import *
from .worker_pool import WorkerPool
from .worker_pool import WorkerError
from .worker_pool import num_cores
