"""
CSV export implementation.
"""

from typing import List, Optional

import pandas as pd

from monopsono.common_conf import settings

from ..utils import PathLike, atomic_write


class CSVExporter:
    """Writes one table per file with a fixed float format and ``\\n`` line ends."""

    def export(
        self,
        table: pd.DataFrame,
        path: PathLike,
        columns: Optional[List[str]] = None,
        float_format: Optional[str] = None,
    ) -> None:
        float_format = settings.CSV_FLOAT_FORMAT if float_format is None else float_format
        frame = table if columns is None else table.reindex(columns=columns)
        with atomic_write(path) as handle:
            frame.to_csv(
                handle,
                index=False,
                float_format=float_format,
                na_rep="",
                lineterminator="\n",
            )
