"""
Domain records, input parsers and panel builders.
"""

from .records import (
    EstabPanel,
    MarketKey,
    MarketPanel,
    market_label,
)
from .parser import (
    parse_controls_file,
    parse_delineation_file,
    parse_flow_file,
    parse_minwage_file,
    parse_sector_file,
    parse_snapshot_file,
)
from .markets import build_market_panel, select_main_jobs, truncate_industry
from .establishments import (
    build_estab_panel,
    hourly_wage,
    implicit_minwage,
    kaitz_index,
    kaitz_quintile,
    territory_of,
)
from .mobility import mobility_terciles, outward_mobility

__all__ = [
    "EstabPanel",
    "MarketKey",
    "MarketPanel",
    "build_estab_panel",
    "build_market_panel",
    "hourly_wage",
    "implicit_minwage",
    "kaitz_index",
    "kaitz_quintile",
    "market_label",
    "mobility_terciles",
    "outward_mobility",
    "parse_controls_file",
    "parse_delineation_file",
    "parse_flow_file",
    "parse_minwage_file",
    "parse_sector_file",
    "parse_snapshot_file",
    "select_main_jobs",
    "territory_of",
]
