"""
XLSX export implementation.
"""

import math
from typing import Dict, Optional

import pandas as pd

from monopsono.common_conf import settings
from monopsono.core.exceptions import ConfigurationError

from ..utils import PathLike, atomic_write, get_column_label, sanitize_spreadsheet_cell


class XLSXExporter:
    """Writes several tables into one workbook, one sheet per table."""

    def export(
        self,
        sheets: Dict[str, pd.DataFrame],
        path: PathLike,
        titles: Optional[Dict[str, str]] = None,
        column_config: Optional[Dict[str, Dict]] = None,
    ) -> None:
        try:
            from openpyxl import Workbook
            from openpyxl.styles import Alignment, Font, PatternFill
            from openpyxl.utils import get_column_letter
        except ImportError as e:
            raise ConfigurationError(
                "XLSX export requires openpyxl. "
                "Install it with: pip install monopsono[export]"
            ) from e

        titles = titles or {}
        header_color = settings.EXPORT_HEADER_COLOR
        header_font = Font(bold=True, color="FFFFFF")
        header_fill = PatternFill(
            start_color=header_color, end_color=header_color, fill_type="solid"
        )

        wb = Workbook()
        wb.remove(wb.active)
        for name, table in sheets.items():
            # sheet names are limited to 31 characters
            ws = wb.create_sheet(title=name[:31])
            current_row = 1
            title = titles.get(name, "")
            if title.strip():
                cell = ws.cell(row=current_row, column=1, value=sanitize_spreadsheet_cell(title))
                cell.font = Font(bold=True, size=settings.EXPORT_TITLE_FONT_SIZE)
                current_row += 2

            for col_idx, field_name in enumerate(table.columns, 1):
                label = get_column_label(str(field_name), column_config)
                cell = ws.cell(
                    row=current_row, column=col_idx, value=sanitize_spreadsheet_cell(label)
                )
                cell.font = header_font
                cell.fill = header_fill
                cell.alignment = Alignment(horizontal="center", vertical="center")
                ws.column_dimensions[get_column_letter(col_idx)].width = (
                    settings.EXPORT_COLUMN_WIDTH
                )

            for row_idx, row in enumerate(table.itertuples(index=False), current_row + 1):
                for col_idx, value in enumerate(row, 1):
                    ws.cell(row=row_idx, column=col_idx, value=_cell_value(value))

        with atomic_write(path, mode="wb") as handle:
            wb.save(handle)


def _cell_value(value):
    if value is None:
        return ""
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float) and math.isnan(value):
        return ""
    return sanitize_spreadsheet_cell(value)
