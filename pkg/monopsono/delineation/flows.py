"""
Commuting flow matrices and district partitions.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd

from monopsono.core.exceptions import DomainError


@dataclass(frozen=True)
class FlowMatrix:
    """
    Square commuter matrix: ``flows[i, j]`` live in region i and work in j.

    The diagonal holds non-commuters. Every region needs resident workers.
    """

    regions: List[str]
    flows: np.ndarray

    def __post_init__(self):
        flows = np.asarray(self.flows, dtype=float)
        n = len(self.regions)
        if flows.shape != (n, n):
            raise DomainError(
                f"Flow matrix shape {flows.shape} does not match {n} regions"
            )
        if len(set(self.regions)) != n:
            raise DomainError("Region codes must be unique")
        if np.any(flows < 0) or not np.all(np.isfinite(flows)):
            raise DomainError("Flows must be finite and non-negative")
        empty = np.flatnonzero(flows.sum(axis=1) <= 0)
        if empty.size:
            raise DomainError(
                f"Region(s) without resident workers: {[self.regions[i] for i in empty]}"
            )
        object.__setattr__(self, "regions", [str(r) for r in self.regions])
        object.__setattr__(self, "flows", flows)

    @classmethod
    def from_long(cls, frame: pd.DataFrame) -> "FlowMatrix":
        """
        Build a matrix from ``origin, destination, commuters`` rows.

        Duplicate origin-destination pairs are summed, so multi-year tables
        pool by simple summation. Regions are sorted.
        """
        regions = sorted(set(frame["origin"]) | set(frame["destination"]))
        position = {region: i for i, region in enumerate(regions)}
        flows = np.zeros((len(regions), len(regions)))
        np.add.at(
            flows,
            (
                frame["origin"].map(position).to_numpy(dtype=int),
                frame["destination"].map(position).to_numpy(dtype=int),
            ),
            frame["commuters"].to_numpy(dtype=float),
        )
        return cls(regions=regions, flows=flows)

    @property
    def total(self) -> float:
        return float(self.flows.sum())

    def to_long(self) -> pd.DataFrame:
        origin, destination = np.nonzero(self.flows)
        return pd.DataFrame(
            {
                "origin": [self.regions[i] for i in origin],
                "destination": [self.regions[j] for j in destination],
                "commuters": self.flows[origin, destination],
            }
        )


@dataclass(frozen=True)
class Partition:
    """Assignment of regions to dense zone ids ``0..zone_count-1``."""

    assignment: Dict[str, int]
    zone_count: int = field(init=False)

    def __post_init__(self):
        zones = sorted(set(self.assignment.values()))
        if zones != list(range(len(zones))):
            raise DomainError("Zone ids must be dense from 0")
        object.__setattr__(self, "zone_count", len(zones))

    def labels(self, regions: Sequence[str]) -> np.ndarray:
        """Zone id per region, in the given order."""
        missing = [region for region in regions if region not in self.assignment]
        if missing:
            raise DomainError(f"Partition does not cover region(s): {missing}")
        return np.array([self.assignment[region] for region in regions], dtype=int)

    def to_frame(self, prefix: str = "cz") -> pd.DataFrame:
        """``district, zone`` table with zone names ``<prefix><id>``."""
        rows = sorted(self.assignment.items())
        return pd.DataFrame(
            {
                "district": [district for district, _ in rows],
                "zone": [f"{prefix}{zone:03d}" for _, zone in rows],
            }
        )

    def delineation(self, prefix: str = "cz") -> Dict[str, str]:
        frame = self.to_frame(prefix)
        return dict(zip(frame["district"], frame["zone"]))

    @classmethod
    def singletons(cls, regions: Sequence[str]) -> "Partition":
        return cls({region: i for i, region in enumerate(regions)})
