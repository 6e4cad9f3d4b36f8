"""
Per-cell concentration tables and their weighted summaries.
"""

from typing import Optional, Union

import numpy as np
import pandas as pd

from monopsono.common_conf import settings
from monopsono.core.enums import Band, Weighting
from monopsono.core.exceptions import DomainError
from monopsono.data_model.records import MARKET_KEY_COLUMNS, MarketPanel
from monopsono.debug.core.categories import Categories

from .indices import weighted_summary

logger = Categories.get_logger(__name__, Categories.CONCENTRATION)

INDEX_COLUMNS = ["hhi", "rbi", "cr1", "ins", "exp"]
CONCENTRATION_COLUMNS = MARKET_KEY_COLUMNS + ["j"] + INDEX_COLUMNS + ["band", "object_kind"]


def band_labels(values: pd.Series, edges=None) -> pd.Series:
    """Vectorized left-closed band classification."""
    low_edge, high_edge = edges or settings.CONCENTRATION_BAND_EDGES
    labels = np.where(
        values < low_edge,
        Band.LOW.value,
        np.where(values < high_edge, Band.MEDIUM.value, Band.HIGH.value),
    )
    return pd.Series(labels, index=values.index)


def concentration_table(panel: MarketPanel, k: Optional[int] = None) -> pd.DataFrame:
    """
    Compute every index for every cell of a market panel.

    The ``cr1`` column holds the k-firm ratio (k defaults to
    ``CONCENTRATION_K``). A ``total`` column with the cell's object total is
    kept for worker weighting; it is not part of ``CONCENTRATION_COLUMNS``.
    """
    k = settings.CONCENTRATION_K if k is None else int(k)
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")

    shares = panel.shares[MARKET_KEY_COLUMNS + ["estab_id", "share"]].copy()
    shares = shares.sort_values(
        MARKET_KEY_COLUMNS + ["share"],
        ascending=[True, True, True, False],
        kind="mergesort",
    )
    grouped = shares.groupby(MARKET_KEY_COLUMNS, sort=True)
    shares["rank"] = grouped.cumcount() + 1
    shares["square"] = shares["share"] ** 2
    shares["entropy"] = shares["share"] * np.log(shares["share"])
    shares["ranked"] = shares["share"] * shares["rank"]
    shares["top"] = shares["share"].where(shares["rank"] <= k, 0.0)

    grouped = shares.groupby(MARKET_KEY_COLUMNS, sort=True)
    table = grouped.agg(
        j=("share", "size"),
        square=("square", "sum"),
        entropy=("entropy", "sum"),
        ranked=("ranked", "sum"),
        top=("top", "sum"),
        high=("share", "max"),
        low=("share", "min"),
    ).reset_index()

    inverse = 1.0 / table["j"]
    uniform = table["high"] == table["low"]
    table["hhi"] = table["square"].where(~uniform, inverse)
    table["rbi"] = (1.0 / (2.0 * table["ranked"] - 1.0)).where(~uniform, inverse)
    table["cr1"] = table["top"].clip(upper=1.0).where(table["j"] > k, 1.0)
    table["ins"] = inverse
    table["exp"] = np.exp(table["entropy"]).where(~uniform, inverse)
    table["band"] = band_labels(table["hhi"])
    table["object_kind"] = panel.object_kind.value

    totals = panel.cells.set_index(MARKET_KEY_COLUMNS)["total"]
    table = table.join(totals, on=MARKET_KEY_COLUMNS)
    logger.info(f"Computed concentration indices for {len(table)} cells")
    return table[CONCENTRATION_COLUMNS + ["total"]].reset_index(drop=True)


def _weights(table: pd.DataFrame, weighting: Weighting) -> np.ndarray:
    if weighting is Weighting.MARKETS:
        return np.ones(len(table))
    if weighting is Weighting.WORKERS:
        return table["total"].to_numpy(dtype=float)
    return table["j"].to_numpy(dtype=float)


def describe_concentration(
    table: pd.DataFrame,
    weighting: Union[Weighting, str] = Weighting.MARKETS,
    columns=INDEX_COLUMNS,
) -> pd.DataFrame:
    """
    Summarize each index across cells.

    Cells are weighted equally (markets), by their object total (workers)
    or by their firm count (establishments). ``equivalent_median`` is the
    number of equal-sized firms implied by the median.
    """
    weighting = Weighting(weighting)
    if table.empty:
        raise DomainError("Cannot describe an empty concentration table")
    weights = _weights(table, weighting)
    rows = []
    for column in columns:
        values = table[column].to_numpy(dtype=float)
        summary = weighted_summary(values, weights)
        rows.append(
            {
                "index": column,
                "weighting": weighting.value,
                **summary,
                "min": float(values.min()),
                "max": float(values.max()),
                "observations": int(len(values)),
                "equivalent_median": 1.0 / summary["p50"],
            }
        )
    return pd.DataFrame(rows)


def yearly_means(table: pd.DataFrame, columns=INDEX_COLUMNS) -> pd.DataFrame:
    """Unweighted mean of every index and of the firm count by year."""
    return (
        table.groupby("year", sort=True)[list(columns) + ["j"]]
        .mean()
        .reset_index()
    )
