"""
Directed weighted modularity of a partition of a flow matrix.
"""

import numpy as np

from monopsono.core.exceptions import DomainError

from .flows import FlowMatrix, Partition


def modularity(fm: FlowMatrix, partition: Partition) -> float:
    """
    Newman modularity for directed weighted flows.

    Q = sum over zones of (within-zone flow / m) - (out_c / m)(in_c / m),
    with m the total flow including diagonals. Aggregating to zones first
    makes the single-zone partition score exactly zero.
    """
    m = fm.total
    if m <= 0:
        raise DomainError("Flow matrix has zero total flow")
    labels = partition.labels(fm.regions)
    membership = np.zeros((labels.size, partition.zone_count))
    membership[np.arange(labels.size), labels] = 1.0
    zone_flows = membership.T @ fm.flows @ membership
    m = zone_flows.sum()
    within = np.trace(zone_flows) / m
    out_share = zone_flows.sum(axis=1) / m
    in_share = zone_flows.sum(axis=0) / m
    return float(within - np.dot(out_share, in_share))


def cross_zone_share(fm: FlowMatrix, partition: Partition) -> float:
    """Share of commuting flow (diagonal excluded) that crosses zone borders."""
    labels = partition.labels(fm.regions)
    commuting = fm.flows.copy()
    np.fill_diagonal(commuting, 0.0)
    total = commuting.sum()
    if total <= 0:
        return 0.0
    crossing = labels[:, None] != labels[None, :]
    return float(commuting[crossing].sum() / total)
