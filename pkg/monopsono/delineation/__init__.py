"""
Commuting-zone delineation by dominant flows and modularity.
"""

from .dominant_flows import dominant_flow_links, merge_zones
from .flows import FlowMatrix, Partition
from .modularity import cross_zone_share, modularity
from .sweep import SweepResult, sweep_thresholds

__all__ = [
    "FlowMatrix",
    "Partition",
    "SweepResult",
    "cross_zone_share",
    "dominant_flow_links",
    "merge_zones",
    "modularity",
    "sweep_thresholds",
]
