"""
Main-job selection and labor-market share panels.
"""

from typing import Mapping, Optional, Union

import numpy as np
import pandas as pd

from monopsono.core.enums import ObjectKind
from monopsono.core.exceptions import DomainError
from monopsono.debug.core.categories import Categories

from .records import MARKET_KEY_COLUMNS, MARKET_PANEL_COLUMNS, MarketPanel

logger = Categories.get_logger(__name__, Categories.DATA)

INDUSTRY_DIGITS = (3, 4, 5)


def select_main_jobs(records: pd.DataFrame) -> pd.DataFrame:
    """
    Flag one main job per worker and year.

    The main job is the record with the highest daily wage (missing wages
    rank lowest), ties broken by the lexicographically smallest estab_id.
    Returns a copy with a boolean ``main_job`` column.
    """
    ranked = records.assign(
        _wage=records["daily_wage"].fillna(-np.inf)
    ).sort_values(
        ["worker_id", "year", "_wage", "estab_id"],
        ascending=[True, True, False, True],
        kind="mergesort",
    )
    first = ~ranked.duplicated(["worker_id", "year"], keep="first")
    flagged = records.copy()
    flagged["main_job"] = False
    flagged.loc[ranked.index[first.to_numpy()], "main_job"] = True
    return flagged


def truncate_industry(codes: pd.Series, digits: int) -> pd.Series:
    """Prefix-take an industry code to ``digits`` characters."""
    if digits not in INDUSTRY_DIGITS:
        raise DomainError(f"industry_digits must be one of {INDUSTRY_DIGITS}, got {digits}")
    return codes.str.slice(0, digits)


def map_zones(regions: pd.Series, delineation: Optional[Mapping[str, str]]) -> pd.Series:
    """Map district codes to zones; without a delineation each district is its own zone."""
    if delineation is None:
        return regions.copy()
    zones = regions.map(dict(delineation))
    unmapped = zones.isna()
    if unmapped.any():
        missing = sorted(regions[unmapped].unique())
        raise DomainError(f"District(s) not covered by the delineation: {missing}")
    return zones.astype(str)


def main_job_heads(records: pd.DataFrame) -> pd.DataFrame:
    """Main-job, non-apprentice rows, flagging main jobs first when needed."""
    if "main_job" not in records.columns:
        records = select_main_jobs(records)
    apprentice = (
        records["apprentice"]
        if "apprentice" in records.columns
        else records["contract"] == "apprentice"
    )
    return records[records["main_job"] & ~apprentice]


def _hires(records: pd.DataFrame, heads: pd.DataFrame):
    """Heads at (estab, t) without any record at the same estab in t-1."""
    years = set(records["year"].unique().tolist())
    previous = records[["worker_id", "estab_id", "year"]].drop_duplicates()
    previous = previous.assign(year=previous["year"] + 1, _before=True)
    merged = heads.merge(previous, on=["worker_id", "estab_id", "year"], how="left")
    merged = merged.set_index(heads.index)
    has_predecessor_year = (heads["year"] - 1).isin(years)
    omitted = sorted(int(y) for y in heads.loc[~has_predecessor_year, "year"].unique())
    hires = heads[has_predecessor_year & merged["_before"].isna()]
    return hires, omitted


def build_market_panel(
    records: pd.DataFrame,
    delineation: Optional[Mapping[str, str]],
    industry_digits: int = 4,
    object_kind: Union[ObjectKind, str] = ObjectKind.EMPLOYMENT,
) -> MarketPanel:
    """
    Aggregate main-job snapshots into firm shares per (industry, zone, year).

    For employment, counts are main-job heads at the June-30 snapshot. For
    hires, only heads not recorded at the same establishment one year
    before count; years without a predecessor year in the data are
    omitted and listed in ``omitted_years``. Cells with a zero total are
    dropped.
    """
    object_kind = ObjectKind(object_kind)
    heads = main_job_heads(records)
    omitted = []
    if object_kind is ObjectKind.HIRES:
        heads, omitted = _hires(records, heads)
        if omitted:
            logger.info(f"Hires panel omits years without predecessor: {omitted}")

    frame = pd.DataFrame(
        {
            "industry": truncate_industry(heads["industry"], industry_digits),
            "zone": map_zones(heads["region"], delineation),
            "year": heads["year"].astype("int64"),
            "estab_id": heads["estab_id"],
        }
    )
    counts = (
        frame.groupby(MARKET_KEY_COLUMNS + ["estab_id"], sort=True)
        .size()
        .rename("count")
        .reset_index()
    )
    counts = counts[counts["count"] > 0]
    totals = counts.groupby(MARKET_KEY_COLUMNS, sort=True)["count"].transform("sum")
    counts["share"] = counts["count"] / totals
    counts = counts[MARKET_PANEL_COLUMNS].reset_index(drop=True)

    cells = (
        counts.groupby(MARKET_KEY_COLUMNS, sort=True)
        .agg(j=("estab_id", "size"), total=("count", "sum"))
        .reset_index()
    )
    cells = cells[cells["total"] > 0].reset_index(drop=True)
    logger.info(
        f"Built {object_kind.value} market panel: {len(cells)} cells, "
        f"{len(counts)} firm shares"
    )
    if delineation is None:
        zone_map = {region: region for region in records["region"].unique()}
    else:
        zone_map = dict(delineation)
    return MarketPanel(
        shares=counts,
        cells=cells,
        object_kind=object_kind,
        industry_digits=industry_digits,
        delineation=zone_map,
        omitted_years=omitted,
    )
