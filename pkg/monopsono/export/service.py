"""
Export service for result tables.
"""

from typing import Dict, List, Optional

import pandas as pd

from .utils import PathLike


class ExportService:
    """
    Writes result tables in the supported formats.

    Exporters are created on first use so the spreadsheet dependency is only
    needed when a workbook is actually written.
    """

    def __init__(self):
        self._exporters = {}

    def _get_exporter(self, format_type: str):
        """Lazy load and cache the exporter for ``csv`` or ``xlsx``."""
        if format_type not in self._exporters:
            if format_type == "csv":
                from .exporters.csv_exporter import CSVExporter

                self._exporters["csv"] = CSVExporter()
            elif format_type == "xlsx":
                from .exporters.xlsx_exporter import XLSXExporter

                self._exporters["xlsx"] = XLSXExporter()
            else:
                raise ValueError(f"Unsupported export format: {format_type}")

        return self._exporters[format_type]

    def export_csv(
        self,
        table: pd.DataFrame,
        path: PathLike,
        columns: Optional[List[str]] = None,
        float_format: Optional[str] = None,
    ) -> None:
        """Export one table as a CSV file."""
        self._get_exporter("csv").export(table, path, columns=columns, float_format=float_format)

    def export_xlsx(
        self,
        sheets: Dict[str, pd.DataFrame],
        path: PathLike,
        titles: Optional[Dict[str, str]] = None,
        column_config: Optional[Dict[str, Dict]] = None,
    ) -> None:
        """Export several tables as one Excel workbook."""
        self._get_exporter("xlsx").export(
            sheets, path, titles=titles, column_config=column_config
        )
