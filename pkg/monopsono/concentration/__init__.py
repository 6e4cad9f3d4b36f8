"""
Concentration indices, bands and weighted summaries.
"""

from .indices import (
    adelman_components,
    classify_band,
    concentration_ratio,
    equivalent_number,
    exponential_index,
    hhi,
    inverse_number,
    rosenbluth,
    weighted_percentile,
    weighted_summary,
)
from .table import (
    CONCENTRATION_COLUMNS,
    concentration_table,
    describe_concentration,
    yearly_means,
)

__all__ = [
    "CONCENTRATION_COLUMNS",
    "adelman_components",
    "classify_band",
    "concentration_ratio",
    "concentration_table",
    "describe_concentration",
    "equivalent_number",
    "exponential_index",
    "hhi",
    "inverse_number",
    "rosenbluth",
    "weighted_percentile",
    "weighted_summary",
    "yearly_means",
]
