"""
Dominant-flow links between districts and the zones they merge into.
"""

from typing import List, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .flows import FlowMatrix, Partition

Link = Tuple[str, str]


def dominant_flow_links(fm: FlowMatrix, tau: float) -> Set[Link]:
    """
    Link each region to its largest out-commuting destination.

    The link i -> j exists when j is the argmax of region i's off-diagonal
    flows and that flow is at least ``tau`` of i's resident workers. Ties
    resolve to the first region in matrix order.
    """
    flows = fm.flows.copy()
    np.fill_diagonal(flows, -np.inf)
    if len(fm.regions) < 2:
        return set()
    target = flows.argmax(axis=1)
    shares = fm.flows[np.arange(len(fm.regions)), target] / fm.flows.sum(axis=1)
    return {
        (fm.regions[i], fm.regions[target[i]])
        for i in np.flatnonzero(shares >= tau)
        if fm.flows[i, target[i]] > 0
    }


def merge_zones(regions: Sequence[str], links) -> Partition:
    """
    Zones as weakly connected components of the link graph.

    Unlinked regions become singleton zones. Zone ids follow the first
    region of each component in the given region order.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(regions)
    graph.add_edges_from(links)
    order = {region: i for i, region in enumerate(regions)}
    components: List[List[str]] = sorted(
        (sorted(component, key=order.__getitem__) for component in nx.weakly_connected_components(graph)),
        key=lambda component: order[component[0]],
    )
    return Partition(
        {region: zone for zone, component in enumerate(components) for region in component}
    )
