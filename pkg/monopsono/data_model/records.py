"""
Domain records for worker snapshots, labor markets and establishments.

Tables are carried as pandas DataFrames with fixed column orders; the
dataclasses here bundle a table with the metadata it was built from.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Tuple

import numpy as np
import pandas as pd

from monopsono.core.enums import Contract, ObjectKind

SNAPSHOT_COLUMNS = [
    "worker_id",
    "estab_id",
    "industry",
    "region",
    "year",
    "daily_wage",
    "contract",
]
SECTOR_COLUMNS = ["industry_prefix", "sector"]
MINWAGE_COLUMNS = ["sector", "territory", "valid_from", "valid_to", "hourly_wage"]
CONTROLS_COLUMNS = [
    "sector",
    "territory",
    "year",
    "log_employment",
    "cba_share",
    "estab_id",
    "akm_premium",
]
FLOW_COLUMNS = ["origin", "destination", "commuters"]
DELINEATION_COLUMNS = ["district", "zone"]

MARKET_KEY_COLUMNS = ["industry", "zone", "year"]
MARKET_PANEL_COLUMNS = ["industry", "zone", "year", "estab_id", "count", "share"]

ESTAB_PANEL_COLUMNS = [
    "estab_id",
    "year",
    "industry",
    "region",
    "zone",
    "market",
    "sector",
    "territory",
    "mean_wage",
    "p25_wage",
    "p50_wage",
    "p75_wage",
    "emp_ft",
    "emp_pt",
    "emp_marginal",
    "emp_overall",
    "closure",
    "minwage",
    "implicit_minwage",
    "kaitz",
    "kaitz_avg",
    "first_regulated_year",
    "hhi_current",
    "rbi_current",
    "cr1_current",
    "ins_current",
    "exp_current",
    "hhi_avg",
    "hhi_predetermined",
    "log_employment",
    "cba_share",
    "akm_premium",
]

CONTRACT_VALUES = [contract.value for contract in Contract]
WAGELESS_CONTRACTS = {Contract.MARGINAL.value, Contract.APPRENTICE.value}


class MarketKey(NamedTuple):
    """One labor-market by year cell."""

    industry: str
    zone: str
    year: int


def market_label(industry: str, zone: str) -> str:
    """Stable identifier of a labor market across years."""
    return f"{industry}|{zone}"


@dataclass(frozen=True)
class MarketPanel:
    """
    Firm shares per labor-market cell.

    ``shares`` holds one row per (industry, zone, year, estab_id) with the
    object count and the share in the cell total. ``cells`` holds one row
    per cell with the firm count ``j`` and ``total``.
    """

    shares: pd.DataFrame
    cells: pd.DataFrame
    object_kind: ObjectKind
    industry_digits: int
    delineation: Dict[str, str]
    omitted_years: List[int] = field(default_factory=list)

    def keys(self) -> List[MarketKey]:
        return [
            MarketKey(row.industry, row.zone, int(row.year))
            for row in self.cells.itertuples(index=False)
        ]

    def share_vectors(self) -> Iterator[Tuple[MarketKey, np.ndarray]]:
        """Yield each cell key with its share vector, ordered by estab_id."""
        for (industry, zone, year), group in self.shares.groupby(
            MARKET_KEY_COLUMNS, sort=True
        ):
            yield MarketKey(industry, zone, int(year)), group["share"].to_numpy()

    def shares_of(self, key: MarketKey) -> np.ndarray:
        mask = (
            (self.shares["industry"] == key.industry)
            & (self.shares["zone"] == key.zone)
            & (self.shares["year"] == key.year)
        )
        return self.shares.loc[mask, "share"].to_numpy()

    @property
    def zone_count(self) -> int:
        return int(self.cells["zone"].nunique())

    def to_frame(self) -> pd.DataFrame:
        """Long share table in ``market_panel.csv`` column order."""
        frame = self.shares[MARKET_PANEL_COLUMNS].copy()
        frame["object_kind"] = self.object_kind.value
        return frame


@dataclass(frozen=True)
class EstabPanel:
    """Establishment by year outcomes with the rows skipped while building it."""

    frame: pd.DataFrame
    skip_report: Dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.frame)

    def to_frame(self) -> pd.DataFrame:
        """Table in ``estab_panel.csv`` column order."""
        return self.frame[ESTAB_PANEL_COLUMNS].copy()
