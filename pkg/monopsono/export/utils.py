"""
Utility functions for export operations.
"""

import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Union

SPREADSHEET_DANGEROUS_PREFIXES = ("=", "+", "-", "@")

PathLike = Union[str, Path]


@contextmanager
def atomic_write(path: PathLike, mode: str = "w", encoding: Optional[str] = "utf-8") -> Iterator[Any]:
    """
    Open a temporary file next to ``path`` and move it into place on success.

    Readers never see a half-written file; on error the temporary file is
    removed and ``path`` is left as it was.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    kwargs = {"encoding": encoding, "newline": ""} if "b" not in mode else {}
    try:
        with os.fdopen(fd, mode, **kwargs) as handle:
            yield handle
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def get_column_label(field_name: str, column_config: Optional[Dict[str, Dict]] = None) -> str:
    """Display label for a column: the configured label or the title-cased name."""
    field_config = (column_config or {}).get(field_name, {})
    return field_config.get("label", field_name.replace("_", " ").title())


def sanitize_spreadsheet_cell(value: Any) -> Any:
    """
    Neutralize spreadsheet formula injection for string values.

    Strings whose first non-whitespace character is one of the
    formula-control prefixes (=, +, -, @) are prefixed with a single quote.
    Numbers pass through, so negative estimates stay numeric.
    """
    if not isinstance(value, str):
        return value

    stripped = value.lstrip()
    if stripped and stripped[0] in SPREADSHEET_DANGEROUS_PREFIXES:
        return f"'{value}"
    return value
