from __future__ import absolute_import

from .graph import Graph
from .graph import GraphError
from .graph import build_graph
from .metis import MetisFormatError
from .metis import read_metis
from .metis import write_metis
from .metis import format_metis
from .generators import GeneratorSpec
from .generators import GeneratorError
from .generators import generate
from .generators import ground_truth
from .generators import path_graph
from .generators import star_graph
