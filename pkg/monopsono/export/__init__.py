"""
Writers for result tables: CSV files and an optional spreadsheet report.
"""

from .service import ExportService
from .utils import atomic_write, get_column_label, sanitize_spreadsheet_cell

__all__ = [
    "ExportService",
    "atomic_write",
    "get_column_label",
    "sanitize_spreadsheet_cell",
]
