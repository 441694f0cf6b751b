from __future__ import absolute_import

from .metrics import Imbalance
from .metrics import cut
from .metrics import imbalance
from .modularity import EdgeReduction
from .modularity import ModularityReport
from .modularity import edge_reduction_study
from .modularity import modularity_report
from .modularity import reduction_to_dict
from .modularity import write_reduction_csv
from .profiles import ProfileTable
from .profiles import geometric_mean
from .profiles import hierarchy_size_ratio
from .profiles import performance_profile
from .profiles import read_cuts
from .profiles import relative_summary
from .profiles import write_cuts
from .profiles import write_records
