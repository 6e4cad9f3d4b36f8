"""
Threshold selection by modularity maximization.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import pandas as pd
from joblib import Parallel, delayed

from monopsono.common_conf import settings
from monopsono.core.exceptions import DomainError
from monopsono.debug.core.categories import Categories

from .dominant_flows import dominant_flow_links, merge_zones
from .flows import FlowMatrix, Partition
from .modularity import cross_zone_share, modularity

logger = Categories.get_logger(__name__, Categories.DELINEATION)

TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SweepResult:
    """Selected threshold and partition with the district-level baseline."""

    tau_star: float
    partition: Partition
    q_star: float
    cross_zone_share: float
    initial_q: float
    initial_cross_zone_share: float
    evaluations: pd.DataFrame


def _evaluate(fm: FlowMatrix, tau: float):
    links = dominant_flow_links(fm, tau)
    partition = merge_zones(fm.regions, links)
    return tau, len(links), partition, modularity(fm, partition)


def sweep_thresholds(
    fm: FlowMatrix, grid: Optional[Sequence[float]] = None, n_jobs: Optional[int] = None
) -> SweepResult:
    """
    Evaluate every threshold and keep the modularity maximizer.

    Thresholds are visited from largest to smallest and a candidate only
    replaces the incumbent when strictly better, so ties go to the larger
    threshold (fewer merges).
    """
    grid = settings.DELINEATION_GRID if grid is None else grid
    if len(grid) == 0:
        raise DomainError("Threshold grid is empty")
    ordered = sorted({float(tau) for tau in grid}, reverse=True)
    n_jobs = settings.THREADS if n_jobs is None else n_jobs

    results = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_evaluate)(fm, tau) for tau in ordered
    )

    best = None
    rows = []
    for tau, link_count, partition, q in results:
        rows.append(
            {
                "tau": tau,
                "links": link_count,
                "zones": partition.zone_count,
                "modularity": q,
                "cross_zone_share": cross_zone_share(fm, partition),
            }
        )
        if best is None or q > best[2] + TIE_TOLERANCE:
            best = (tau, partition, q)

    tau_star, partition, q_star = best
    districts = Partition.singletons(fm.regions)
    result = SweepResult(
        tau_star=tau_star,
        partition=partition,
        q_star=q_star,
        cross_zone_share=cross_zone_share(fm, partition),
        initial_q=modularity(fm, districts),
        initial_cross_zone_share=cross_zone_share(fm, districts),
        evaluations=pd.DataFrame(rows).sort_values("tau").reset_index(drop=True),
    )
    logger.info(
        f"Selected tau={tau_star:.4f}: {partition.zone_count} zones, "
        f"modularity {result.initial_q:.3f} -> {q_star:.3f}"
    )
    return result
