from __future__ import absolute_import

from .partition import BalanceSpec
from .partition import Partition
from .refinement import lp_refine
from .refinement import project
from .initial import EPSILON_SPLITS
from .initial import bipartition
from .initial import recursive_bipartition
from .multilevel import Hierarchy
from .multilevel import Level
from .multilevel import PartitionerConfig
from .multilevel import RunStats
from .multilevel import build_hierarchy
from .multilevel import partition
