from __future__ import absolute_import

from .clustering import Clustering
from .clustering import ClusteringParams
from .clustering import lp_cluster
from .clustering import two_hop_cluster
from .clustering import cluster_isolated
from .clustering import coarsening_clustering
from .contraction import ContractionResult
from .contraction import contract
from .sparsifiers import SparsifyConfig
from .sparsifiers import SparsifierError
from .sparsifiers import target_edge_count
from .sparsifiers import should_sparsify
from .sparsifiers import sparsify
from .sparsifiers import make_sparsifier
