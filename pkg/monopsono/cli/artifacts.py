"""
Readers for artifacts written by earlier subcommands.
"""

from pathlib import Path

import pandas as pd

from monopsono.core.enums import ObjectKind
from monopsono.core.exceptions import ParseError
from monopsono.core.file_reader import FileReader, integer_column, numeric_column
from monopsono.data_model.records import (
    ESTAB_PANEL_COLUMNS,
    MARKET_KEY_COLUMNS,
    MARKET_PANEL_COLUMNS,
    MarketPanel,
)
from monopsono.minwage_analysis.instrument import INSTRUMENT_COLUMNS

MARKET_PANEL_FILE = "market_panel.csv"
ESTAB_PANEL_FILE = "estab_panel.csv"
INSTRUMENT_FILE = "instrument.csv"
DELINEATION_FILE = "delineation.csv"

ESTAB_TEXT_COLUMNS = ["estab_id", "industry", "region", "zone", "market", "sector", "territory"]
ESTAB_EXTRA_COLUMNS = ["mobility_group"]


def _optional_numeric(df: pd.DataFrame, column: str) -> pd.Series:
    return numeric_column(df, column, allow_empty=pd.Series(True, index=df.index))


def read_market_panel(path: Path) -> MarketPanel:
    """Rebuild a market panel from ``market_panel.csv``."""
    df = FileReader(MARKET_PANEL_COLUMNS, optional_columns=["object_kind"]).read_file(path)
    shares = pd.DataFrame(
        {
            "industry": df["industry"].str.strip(),
            "zone": df["zone"].str.strip(),
            "year": integer_column(df, "year"),
            "estab_id": df["estab_id"].str.strip(),
            "count": numeric_column(df, "count"),
            "share": numeric_column(df, "share"),
        },
        columns=MARKET_PANEL_COLUMNS,
    )
    cells = (
        shares.groupby(MARKET_KEY_COLUMNS, sort=True)
        .agg(j=("estab_id", "size"), total=("count", "sum"))
        .reset_index()
    )
    kind = df["object_kind"].iloc[0] if "object_kind" in df and len(df) else "employment"
    digits = int(shares["industry"].str.len().max()) if len(shares) else 4
    return MarketPanel(
        shares=shares,
        cells=cells,
        object_kind=ObjectKind(kind),
        industry_digits=digits,
        delineation={},
    )


def read_estab_panel(path: Path) -> pd.DataFrame:
    """Load ``estab_panel.csv`` with text keys and numeric outcomes."""
    df = FileReader(ESTAB_PANEL_COLUMNS, optional_columns=ESTAB_EXTRA_COLUMNS).read_file(path)
    panel = pd.DataFrame(index=df.index)
    for column in ESTAB_PANEL_COLUMNS:
        if column in ESTAB_TEXT_COLUMNS:
            panel[column] = df[column].str.strip()
        elif column == "year":
            panel[column] = integer_column(df, column)
        else:
            panel[column] = _optional_numeric(df, column)
    if "mobility_group" in df:
        panel["mobility_group"] = df["mobility_group"].str.strip()
    return panel


def read_instrument(path: Path) -> pd.DataFrame:
    df = FileReader(INSTRUMENT_COLUMNS).read_file(path)
    return pd.DataFrame(
        {
            "industry": df["industry"].str.strip(),
            "zone": df["zone"].str.strip(),
            "year": integer_column(df, "year"),
            "market": df["market"].str.strip(),
            "j": integer_column(df, "j"),
            "contributing": integer_column(df, "contributing"),
            "loo_ins": _optional_numeric(df, "loo_ins"),
        },
        columns=INSTRUMENT_COLUMNS,
    )


def read_text_table(path: Path) -> pd.DataFrame:
    """Read any artifact verbatim as strings."""
    if not Path(path).is_file():
        raise ParseError(f"Input file not found: {path}")
    return pd.read_csv(path, dtype=str, keep_default_na=False)
