"""
CSV reading and header validation for input files.
"""

from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import pandas as pd

from .exceptions import ParseError, SchemaError

PathLike = Union[str, Path]


class FileReader:
    """Reads a delimited input file against a declared column schema."""

    def __init__(
        self,
        required_columns: Sequence[str],
        optional_columns: Iterable[str] = (),
        delimiter: str = ",",
        encoding: str = "utf-8",
    ):
        self.required_columns = list(required_columns)
        self.optional_columns = set(optional_columns)
        self.delimiter = delimiter
        self.encoding = encoding

    def read_file(self, path: PathLike) -> pd.DataFrame:
        """Read the file as strings, keeping empty fields as empty strings."""
        path = Path(path)
        if not path.is_file():
            raise ParseError(f"Input file not found: {path}")
        try:
            df = pd.read_csv(
                path,
                delimiter=self.delimiter,
                encoding=self.encoding,
                dtype=str,
                keep_default_na=False,
                skipinitialspace=False,
            )
        except pd.errors.EmptyDataError as e:
            raise SchemaError(f"File has no header row: {path}") from e
        except UnicodeDecodeError as e:
            raise ParseError(f"File is not valid {self.encoding}: {path}") from e

        # Normalize header whitespace
        df.rename(
            columns=lambda c: c.strip() if isinstance(c, str) else c, inplace=True
        )
        self.validate_headers(list(df.columns))
        return df

    def validate_headers(
        self, df_columns: list, required_columns: Optional[set] = None
    ) -> None:
        """Validate file headers against the schema."""
        required = set(self.required_columns if required_columns is None else required_columns)
        file_columns = set(df_columns)

        missing_columns = required - file_columns
        if missing_columns:
            sorted_missing = sorted(missing_columns)
            raise SchemaError(
                f"Missing columns: {sorted_missing}. "
                f"Expected header: {','.join(self.required_columns)}",
                row_number=0,
                field_name=sorted_missing[0],
            )

        extra_columns = file_columns - required - self.optional_columns
        if extra_columns:
            sorted_extra = sorted(extra_columns)
            raise SchemaError(
                f"Unexpected columns found: {sorted_extra}",
                row_number=0,
                field_name=sorted_extra[0],
            )


def _first_row(mask: pd.Series) -> int:
    """1-based data-row number of the first true entry."""
    return int(mask.to_numpy().argmax()) + 1


def numeric_column(
    df: pd.DataFrame, field_name: str, allow_empty: Optional[pd.Series] = None
) -> pd.Series:
    """
    Convert a string column to floats.

    Empty cells become NaN where ``allow_empty`` is true and raise
    ``ParseError`` elsewhere. Unparseable cells always raise.
    """
    text = df[field_name].str.strip()
    empty = text == ""
    values = pd.to_numeric(text.where(~empty), errors="coerce")
    bad = values.isna() & ~empty
    if bad.any():
        row = _first_row(bad)
        raise ParseError(
            f"Non-numeric value '{df[field_name].iloc[row - 1]}'", row, field_name
        )
    disallowed = empty if allow_empty is None else empty & ~allow_empty
    if disallowed.any():
        raise ParseError("Missing value", _first_row(disallowed), field_name)
    return values.astype(float)


def integer_column(df: pd.DataFrame, field_name: str) -> pd.Series:
    """Convert a string column to integers."""
    values = numeric_column(df, field_name)
    fractional = values != values.round()
    if fractional.any():
        row = _first_row(fractional)
        raise ParseError(
            f"Non-integer value '{df[field_name].iloc[row - 1]}'", row, field_name
        )
    return values.astype("int64")


def enum_column(df: pd.DataFrame, field_name: str, allowed: Iterable[str]) -> pd.Series:
    """Validate that every cell of a column is one of ``allowed``."""
    text = df[field_name].str.strip()
    bad = ~text.isin(list(allowed))
    if bad.any():
        row = _first_row(bad)
        raise ParseError(
            f"Unknown value '{df[field_name].iloc[row - 1]}'", row, field_name
        )
    return text
