"""
Parsers for the declared input file formats.

Each parser validates the header, converts columns and raises
``ParseError`` naming the 1-based data row and the column of the first
offending cell.
"""

from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd

from monopsono.core.enums import Territory
from monopsono.core.exceptions import ParseError
from monopsono.core.file_reader import (
    FileReader,
    enum_column,
    integer_column,
    numeric_column,
)
from monopsono.debug.core.categories import Categories

from .records import (
    CONTRACT_VALUES,
    CONTROLS_COLUMNS,
    DELINEATION_COLUMNS,
    FLOW_COLUMNS,
    MINWAGE_COLUMNS,
    SECTOR_COLUMNS,
    SNAPSHOT_COLUMNS,
    WAGELESS_CONTRACTS,
)

logger = Categories.get_logger(__name__, Categories.DATA)

PathLike = Union[str, Path]

MIN_INDUSTRY_DIGITS = 5


def _require_text(df: pd.DataFrame, field_name: str) -> pd.Series:
    text = df[field_name].str.strip()
    empty = text == ""
    if empty.any():
        raise ParseError("Missing value", int(empty.to_numpy().argmax()) + 1, field_name)
    return text


def _digit_codes(df: pd.DataFrame, field_name: str, min_length: int) -> pd.Series:
    text = _require_text(df, field_name)
    bad = ~text.str.fullmatch(r"\d+") | (text.str.len() < min_length)
    if bad.any():
        row = int(bad.to_numpy().argmax()) + 1
        raise ParseError(
            f"Expected a digit code of at least {min_length} characters, "
            f"got '{df[field_name].iloc[row - 1]}'",
            row,
            field_name,
        )
    return text


def _dates(df: pd.DataFrame, field_name: str, allow_empty: bool) -> pd.Series:
    text = df[field_name].str.strip()
    empty = text == ""
    parsed = pd.to_datetime(text.where(~empty), format="%Y-%m-%d", errors="coerce")
    bad = parsed.isna() & ~empty
    if not allow_empty:
        bad = bad | empty
    if bad.any():
        row = int(bad.to_numpy().argmax()) + 1
        raise ParseError(
            f"Expected an ISO date, got '{df[field_name].iloc[row - 1]}'",
            row,
            field_name,
        )
    return parsed


def parse_snapshot_file(path: PathLike) -> pd.DataFrame:
    """
    Read ``snapshots.csv`` into a snapshot table.

    The result has the snapshot columns plus a boolean ``apprentice`` flag;
    apprentices are kept here and excluded by the aggregations.
    """
    df = FileReader(SNAPSHOT_COLUMNS).read_file(path)
    contract = enum_column(df, "contract", CONTRACT_VALUES)
    records = pd.DataFrame(
        {
            "worker_id": _require_text(df, "worker_id"),
            "estab_id": _require_text(df, "estab_id"),
            "industry": _digit_codes(df, "industry", MIN_INDUSTRY_DIGITS),
            "region": _digit_codes(df, "region", 2),
            "year": integer_column(df, "year"),
            "daily_wage": numeric_column(
                df, "daily_wage", allow_empty=contract.isin(WAGELESS_CONTRACTS)
            ),
            "contract": contract,
        },
        columns=SNAPSHOT_COLUMNS,
    )
    negative = records["daily_wage"] < 0
    if negative.any():
        raise ParseError(
            "Negative daily wage", int(negative.to_numpy().argmax()) + 1, "daily_wage"
        )
    records["apprentice"] = records["contract"] == "apprentice"
    logger.info(f"Parsed {len(records)} snapshot rows from {path}")
    return records.reset_index(drop=True)


def parse_sector_file(path: PathLike) -> pd.DataFrame:
    """Read ``sectors.csv``: industry prefixes mapped to minimum-wage sectors."""
    df = FileReader(SECTOR_COLUMNS).read_file(path)
    sectors = pd.DataFrame(
        {
            "industry_prefix": _digit_codes(df, "industry_prefix", 1),
            "sector": _require_text(df, "sector"),
        }
    )
    duplicated = sectors["industry_prefix"].duplicated()
    if duplicated.any():
        raise ParseError(
            "Duplicate industry prefix",
            int(duplicated.to_numpy().argmax()) + 1,
            "industry_prefix",
        )
    return sectors


def parse_minwage_file(path: PathLike) -> pd.DataFrame:
    """
    Read ``minwage.csv``: hourly minimum wages by sector, territory and date range.

    An empty ``valid_to`` leaves the interval open.
    """
    df = FileReader(MINWAGE_COLUMNS).read_file(path)
    schedule = pd.DataFrame(
        {
            "sector": _require_text(df, "sector"),
            "territory": enum_column(df, "territory", [t.value for t in Territory]),
            "valid_from": _dates(df, "valid_from", allow_empty=False),
            "valid_to": _dates(df, "valid_to", allow_empty=True),
            "hourly_wage": numeric_column(df, "hourly_wage"),
        }
    )
    inverted = schedule["valid_to"].notna() & (
        schedule["valid_to"] < schedule["valid_from"]
    )
    if inverted.any():
        raise ParseError(
            "valid_to precedes valid_from",
            int(inverted.to_numpy().argmax()) + 1,
            "valid_to",
        )
    non_positive = schedule["hourly_wage"] <= 0
    if non_positive.any():
        raise ParseError(
            "Minimum wage must be positive",
            int(non_positive.to_numpy().argmax()) + 1,
            "hourly_wage",
        )
    return schedule


def parse_controls_file(path: PathLike) -> pd.DataFrame:
    """
    Read ``controls.csv``.

    Rows either carry sector-territory-year controls (``log_employment``,
    ``cba_share``) or an establishment's ``akm_premium``; the ``kind``
    column records which. An empty ``log_employment`` keeps the value
    computed from the establishment panel.
    """
    df = FileReader(CONTROLS_COLUMNS).read_file(path)
    is_estab = df["estab_id"].str.strip() != ""
    controls = pd.DataFrame(
        {
            "kind": np.where(is_estab, "estab", "sector"),
            "sector": df["sector"].str.strip(),
            "territory": df["territory"].str.strip(),
            "year": numeric_column(df, "year", allow_empty=is_estab),
            "log_employment": numeric_column(
                df, "log_employment", allow_empty=pd.Series(True, index=df.index)
            ),
            "cba_share": numeric_column(df, "cba_share", allow_empty=is_estab),
            "estab_id": df["estab_id"].str.strip(),
            "akm_premium": numeric_column(df, "akm_premium", allow_empty=~is_estab),
        }
    )
    territories = {t.value for t in Territory}
    bad_territory = ~is_estab & ~controls["territory"].isin(territories)
    if bad_territory.any():
        raise ParseError(
            f"Unknown territory '{controls['territory'][bad_territory].iloc[0]}'",
            int(bad_territory.to_numpy().argmax()) + 1,
            "territory",
        )
    return controls


def parse_flow_file(path: PathLike) -> pd.DataFrame:
    """Read ``flows.csv`` as a long origin-destination table."""
    df = FileReader(FLOW_COLUMNS).read_file(path)
    flows = pd.DataFrame(
        {
            "origin": _require_text(df, "origin"),
            "destination": _require_text(df, "destination"),
            "commuters": numeric_column(df, "commuters"),
        }
    )
    negative = flows["commuters"] < 0
    if negative.any():
        raise ParseError(
            "Negative commuter count",
            int(negative.to_numpy().argmax()) + 1,
            "commuters",
        )
    return flows


def parse_delineation_file(path: PathLike) -> dict:
    """Read ``delineation.csv`` into a district to zone mapping."""
    df = FileReader(DELINEATION_COLUMNS).read_file(path)
    district = _require_text(df, "district")
    zone = _require_text(df, "zone")
    duplicated = district.duplicated()
    if duplicated.any():
        raise ParseError(
            "District assigned twice",
            int(duplicated.to_numpy().argmax()) + 1,
            "district",
        )
    return dict(zip(district, zone))
