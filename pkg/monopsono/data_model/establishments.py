"""
Establishment by year panel: wages, employment, minimum wages and
market concentration.
"""

from typing import Dict, Mapping, Optional

import numpy as np
import pandas as pd

from monopsono.common_conf import settings
from monopsono.core.enums import Territory
from monopsono.core.exceptions import DomainError
from monopsono.debug.core.categories import Categories

from .markets import main_job_heads, map_zones, truncate_industry
from .records import ESTAB_PANEL_COLUMNS, EstabPanel, MarketPanel, market_label

logger = Categories.get_logger(__name__, Categories.DATA)

BERLIN_STATE = 11
EAST_STATES = range(12, 17)


def territory_of(region: str) -> Territory:
    """Minimum-wage territory from the two-digit state prefix of a district code."""
    prefix = str(region)[:2]
    if len(prefix) < 2 or not prefix.isdigit():
        raise DomainError(f"District code '{region}' has no state prefix")
    state = int(prefix)
    if state == BERLIN_STATE:
        return Territory.BERLIN
    if state in EAST_STATES:
        return Territory.EAST
    return Territory.WEST


def hourly_wage(daily_wage, days_per_week=None, hours_per_week=None):
    """Convert a calendar-day wage to an hourly wage."""
    days = settings.DAYS_PER_WEEK if days_per_week is None else days_per_week
    hours = settings.HOURS_PER_WEEK if hours_per_week is None else hours_per_week
    return daily_wage * days / hours


def kaitz_index(minwage: float, median_daily_wage: float) -> float:
    """Minimum wage relative to the median hourly wage."""
    if not minwage > 0 or not median_daily_wage > 0:
        raise DomainError(
            f"Kaitz inputs must be positive, got minwage={minwage}, "
            f"median_daily_wage={median_daily_wage}"
        )
    return float(minwage / hourly_wage(median_daily_wage))


def kaitz_quintile(kaitz, cuts=None):
    """Quintile group 1..5 of Kaitz values; each cut opens the next group."""
    cuts = settings.KAITZ_CUTS if cuts is None else cuts
    return np.searchsorted(np.asarray(cuts, dtype=float), kaitz, side="right") + 1


def _modal(frame: pd.DataFrame, keys, column: str) -> pd.Series:
    """Most frequent value of ``column`` per key, ties to the smallest value."""
    counts = frame.groupby(keys + [column], sort=True).size().rename("_n").reset_index()
    counts = counts.sort_values(
        keys + ["_n", column], ascending=[True] * len(keys) + [False, True]
    )
    return counts.drop_duplicates(keys).set_index(keys)[column]


def assign_sectors(industries: pd.Series, sector_map: pd.DataFrame) -> pd.Series:
    """Longest-prefix match of industry codes against the sector map."""
    result = pd.Series(np.nan, index=industries.index, dtype=object)
    by_length = sector_map.assign(
        _len=sector_map["industry_prefix"].str.len()
    ).sort_values("_len", ascending=False, kind="mergesort")
    for length, group in by_length.groupby("_len", sort=False):
        lookup = dict(zip(group["industry_prefix"], group["sector"]))
        matched = industries.str.slice(0, int(length)).map(lookup)
        result = result.where(result.notna(), matched)
    return result


def _resolve_territory(
    regions: pd.Series, sectors: pd.Series, schedule: pd.DataFrame
) -> pd.Series:
    territories = regions.map(lambda region: territory_of(region).value)
    berlin_sectors = set(
        schedule.loc[schedule["territory"] == Territory.BERLIN.value, "sector"]
    )
    overrides = settings.BERLIN_SECTOR_TERRITORY
    default = settings.BERLIN_DEFAULT_TERRITORY
    berlin = territories == Territory.BERLIN.value
    resolved = sectors[berlin].map(
        lambda sector: Territory.BERLIN.value
        if sector in berlin_sectors
        else Territory(overrides.get(sector, default)).value
    )
    territories.loc[berlin] = resolved
    return territories


def join_minwage(panel: pd.DataFrame, schedule: pd.DataFrame) -> pd.Series:
    """
    Hourly minimum wage in force on June 30 of each row's year.

    When several intervals cover the date the most recently started wins.
    """
    result = pd.Series(np.nan, index=panel.index, dtype=float)
    if schedule.empty or panel.empty:
        return result
    rows = panel[["sector", "territory", "year"]].reset_index()
    rows["_date"] = pd.to_datetime(rows["year"].astype(str) + "-06-30")
    merged = rows.merge(schedule, on=["sector", "territory"], how="inner")
    in_force = (merged["valid_from"] <= merged["_date"]) & (
        merged["valid_to"].isna() | (merged["_date"] <= merged["valid_to"])
    )
    merged = merged[in_force].sort_values(["index", "valid_from"], kind="mergesort")
    latest = merged.drop_duplicates("index", keep="last").set_index("index")
    result.loc[latest.index] = latest["hourly_wage"].to_numpy()
    return result


def implicit_minwage(
    heads: pd.DataFrame, panel: pd.DataFrame, percentile: Optional[float] = None
) -> pd.DataFrame:
    """
    Proxy wage floor per (sector, territory) before regulation.

    The value is the given percentile (default ``IMPLICIT_MINWAGE_PERCENTILE``)
    of hourly regular full-time wages in the year before the
    sector-territory first has a minimum wage in force. Returns columns
    ``sector, territory, year, implicit_minwage``.
    """
    percentile = settings.IMPLICIT_MINWAGE_PERCENTILE if percentile is None else percentile
    regulated = panel[panel["minwage"].notna()]
    introductions = (
        regulated.groupby(["sector", "territory"])["year"].min().rename("intro").reset_index()
    )
    ft = heads[heads["contract"] == "regular_ft"][["estab_id", "year", "daily_wage"]]
    located = ft.merge(
        panel[["estab_id", "year", "sector", "territory"]], on=["estab_id", "year"]
    )
    rows = []
    for row in introductions.itertuples(index=False):
        before = row.intro - 1
        wages = located.loc[
            (located["sector"] == row.sector)
            & (located["territory"] == row.territory)
            & (located["year"] == before),
            "daily_wage",
        ].dropna()
        if wages.empty:
            continue
        rows.append(
            {
                "sector": row.sector,
                "territory": row.territory,
                "year": int(before),
                "implicit_minwage": float(
                    np.percentile(hourly_wage(wages.to_numpy()), percentile)
                ),
            }
        )
    return pd.DataFrame(
        rows, columns=["sector", "territory", "year", "implicit_minwage"]
    ).astype({"year": "int64", "implicit_minwage": float})


def _attach_concentration(panel: pd.DataFrame, market_panel: MarketPanel) -> pd.DataFrame:
    from monopsono.concentration.table import concentration_table

    table = concentration_table(market_panel)
    renamed = table.rename(
        columns={
            "hhi": "hhi_current",
            "rbi": "rbi_current",
            "cr1": "cr1_current",
            "ins": "ins_current",
            "exp": "exp_current",
        }
    )[
        [
            "industry",
            "zone",
            "year",
            "hhi_current",
            "rbi_current",
            "cr1_current",
            "ins_current",
            "exp_current",
        ]
    ]
    keyed = panel.assign(
        _market_industry=truncate_industry(panel["industry"], market_panel.industry_digits)
    )
    merged = keyed.merge(
        renamed.rename(columns={"industry": "_market_industry"}),
        on=["_market_industry", "zone", "year"],
        how="left",
    )
    merged["market"] = [
        market_label(industry, zone)
        for industry, zone in zip(merged["_market_industry"], merged["zone"])
    ]
    return merged.drop(columns="_market_industry")


def _predetermined_hhi(panel: pd.DataFrame) -> pd.Series:
    """HHI in the year before first regulation, else in the earliest year."""
    first_year = panel.groupby("estab_id")["year"].transform("min")
    before = (panel["first_regulated_year"] - 1).fillna(-1).astype("int64")
    lookup = panel.set_index(["estab_id", "year"])["hhi_current"]
    pre = pd.Series(
        lookup.reindex(pd.MultiIndex.from_arrays([panel["estab_id"], before])).to_numpy(),
        index=panel.index,
    )
    earliest = pd.Series(
        lookup.reindex(pd.MultiIndex.from_arrays([panel["estab_id"], first_year])).to_numpy(),
        index=panel.index,
    )
    return pre.where(pre.notna(), earliest)


def _controls(panel: pd.DataFrame, controls: Optional[pd.DataFrame]) -> pd.DataFrame:
    computed = (
        panel.groupby(["sector", "territory", "year"])["emp_overall"]
        .sum()
        .pipe(np.log)
        .replace(-np.inf, np.nan)
        .rename("log_employment")
        .reset_index()
    )
    panel = panel.merge(computed, on=["sector", "territory", "year"], how="left")
    panel["cba_share"] = np.nan
    panel["akm_premium"] = np.nan
    if controls is None or controls.empty:
        return panel

    sector_rows = controls[controls["kind"] == "sector"].copy()
    if not sector_rows.empty:
        sector_rows["year"] = sector_rows["year"].astype("int64")
        keyed = panel[["sector", "territory", "year"]].merge(
            sector_rows[["sector", "territory", "year", "log_employment", "cba_share"]],
            on=["sector", "territory", "year"],
            how="left",
        )
        supplied = keyed["log_employment"].to_numpy()
        panel["log_employment"] = np.where(
            np.isnan(supplied), panel["log_employment"], supplied
        )
        panel["cba_share"] = keyed["cba_share"].to_numpy()

    estab_rows = controls[controls["kind"] == "estab"]
    if not estab_rows.empty:
        premiums = estab_rows.drop_duplicates("estab_id", keep="last").set_index(
            "estab_id"
        )["akm_premium"]
        panel["akm_premium"] = panel["estab_id"].map(premiums)
    return panel


def build_estab_panel(
    records: pd.DataFrame,
    sector_map: pd.DataFrame,
    minwage_schedule: pd.DataFrame,
    market_panel: MarketPanel,
    controls: Optional[pd.DataFrame] = None,
) -> EstabPanel:
    """
    Aggregate main-job snapshots into an establishment by year panel.

    Each establishment-year takes its modal industry and district. Wage
    moments are over regular full-time daily wages, head counts exclude
    apprentices, and concentration comes from the market panel's cell for
    the establishment's market. Establishments whose industry maps to no
    sector are skipped and counted in ``skip_report``.
    """
    heads = main_job_heads(records)
    skip_report: Dict[str, int] = {}
    keys = ["estab_id", "year"]

    industry = _modal(heads, keys, "industry")
    region = _modal(heads, keys, "region")
    panel = pd.concat([industry, region], axis=1).reset_index()
    panel["sector"] = assign_sectors(panel["industry"], sector_map)
    unmapped = panel["sector"].isna()
    if unmapped.any():
        skip_report["unmapped_sector_estabs"] = int(panel.loc[unmapped, "estab_id"].nunique())
        skip_report["unmapped_sector_rows"] = int(unmapped.sum())
        logger.info(
            f"Skipped {skip_report['unmapped_sector_estabs']} establishments "
            f"without a mapped sector"
        )
        panel = panel[~unmapped].reset_index(drop=True)

    panel["zone"] = map_zones(panel["region"], market_panel.delineation)
    panel["territory"] = _resolve_territory(panel["region"], panel["sector"], minwage_schedule)

    counts = (
        heads.groupby(keys + ["contract"]).size().unstack("contract", fill_value=0)
    )
    for contract, column in (
        ("regular_ft", "emp_ft"),
        ("regular_pt", "emp_pt"),
        ("marginal", "emp_marginal"),
    ):
        values = counts[contract] if contract in counts.columns else 0
        panel[column] = (
            pd.Series(values, index=counts.index)
            .reindex(pd.MultiIndex.from_frame(panel[keys]))
            .fillna(0)
            .astype("int64")
            .to_numpy()
        )
    panel["emp_overall"] = panel["emp_ft"] + panel["emp_pt"] + panel["emp_marginal"]

    ft_wages = heads[heads["contract"] == "regular_ft"].groupby(keys)["daily_wage"]
    moments = pd.DataFrame(
        {
            "mean_wage": ft_wages.mean(),
            "p25_wage": ft_wages.quantile(0.25),
            "p50_wage": ft_wages.quantile(0.50),
            "p75_wage": ft_wages.quantile(0.75),
        }
    )
    panel = panel.merge(moments, left_on=keys, right_index=True, how="left")

    last_year = panel.groupby("estab_id")["year"].transform("max")
    panel["closure"] = (
        (panel["year"] == last_year) & (panel["year"] < records["year"].max())
    ).astype("int64")

    panel["minwage"] = join_minwage(panel, minwage_schedule).to_numpy()
    implicit = implicit_minwage(heads, panel)
    panel = panel.merge(implicit, on=["sector", "territory", "year"], how="left")

    valid = panel["minwage"].notna() & (panel["p50_wage"] > 0)
    panel["kaitz"] = np.where(
        valid, panel["minwage"] / hourly_wage(panel["p50_wage"]), np.nan
    )
    panel["kaitz_avg"] = panel.groupby("estab_id")["kaitz"].transform("mean")
    panel["first_regulated_year"] = (
        panel["year"].where(panel["minwage"].notna()).groupby(panel["estab_id"]).transform("min")
    )

    panel = _attach_concentration(panel, market_panel)
    panel["hhi_avg"] = panel.groupby("estab_id")["hhi_current"].transform("mean")
    panel["hhi_predetermined"] = _predetermined_hhi(panel)
    panel = _controls(panel, controls)

    panel = panel.sort_values(keys, kind="mergesort").reset_index(drop=True)
    logger.info(f"Built establishment panel with {len(panel)} establishment-years")
    return EstabPanel(frame=panel[ESTAB_PANEL_COLUMNS], skip_report=skip_report)
