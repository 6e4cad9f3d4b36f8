"""
Outward mobility of job switchers by labor market.
"""

from typing import Mapping, Optional

import numpy as np
import pandas as pd

from .markets import main_job_heads, map_zones, truncate_industry
from .records import market_label

MOBILITY_GROUPS = ("low", "medium", "high")


def outward_mobility(
    records: pd.DataFrame,
    delineation: Optional[Mapping[str, str]] = None,
    industry_digits: int = 4,
) -> pd.DataFrame:
    """
    Share of job switchers leaving their labor market.

    A switcher holds main jobs in consecutive years t-1 and t at different
    establishments. Switchers are attributed to the market and year t-1 of
    the job they leave, and count as movers when the new job lies in
    another market. Market-years without switchers are absent from the
    result, which has columns ``industry, zone, year, stayers, movers,
    mobility``.
    """
    heads = main_job_heads(records)
    jobs = pd.DataFrame(
        {
            "worker_id": heads["worker_id"],
            "estab_id": heads["estab_id"],
            "year": heads["year"].astype("int64"),
            "industry": truncate_industry(heads["industry"], industry_digits),
            "zone": map_zones(heads["region"], delineation),
        }
    )
    following = jobs.assign(year=jobs["year"] - 1)
    pairs = jobs.merge(following, on=["worker_id", "year"], suffixes=("", "_next"))
    switches = pairs[pairs["estab_id"] != pairs["estab_id_next"]]
    moved = (switches["industry"] != switches["industry_next"]) | (
        switches["zone"] != switches["zone_next"]
    )
    counted = (
        switches.assign(movers=moved.astype("int64"), stayers=(~moved).astype("int64"))
        .groupby(["industry", "zone", "year"], sort=True)[["stayers", "movers"]]
        .sum()
        .reset_index()
    )
    counted["mobility"] = counted["movers"] / (counted["stayers"] + counted["movers"])
    return counted


def mobility_terciles(estab_frame: pd.DataFrame, mobility: pd.DataFrame) -> pd.Series:
    """
    Low / medium / high outward-mobility group per establishment.

    Each establishment is scored by the mean mobility of the markets it is
    observed in; scores are split into terciles within each sector.
    Establishments whose markets have no switchers get no group.
    """
    market_mobility = mobility.assign(
        market=[market_label(i, z) for i, z in zip(mobility["industry"], mobility["zone"])]
    ).groupby("market")["mobility"].mean()
    scores = (
        estab_frame.assign(_score=estab_frame["market"].map(market_mobility))
        .groupby(["estab_id", "sector"])["_score"]
        .mean()
        .dropna()
        .reset_index()
    )
    ranks = scores.groupby("sector")["_score"].rank(method="first")
    sizes = scores.groupby("sector")["_score"].transform("size")
    tercile = np.ceil(3 * ranks / sizes).astype(int).clip(1, 3)
    groups = pd.Series(
        [MOBILITY_GROUPS[t - 1] for t in tercile], index=scores["estab_id"].to_numpy()
    )
    # an establishment that changes sector keeps its first group
    groups = groups[~groups.index.duplicated()]
    return estab_frame["estab_id"].map(groups).rename("mobility_group")
