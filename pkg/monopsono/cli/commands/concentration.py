"""
Concentration indices per labor-market cell and their summaries.

Usage:
    monopsono concentration --out run --digits 4 --object employment
"""

import pandas as pd

from monopsono.concentration import (
    CONCENTRATION_COLUMNS,
    concentration_table,
    describe_concentration,
    yearly_means,
)
from monopsono.core.enums import Weighting
from monopsono.decorators.performance import stage_monitor

from ..artifacts import MARKET_PANEL_FILE, read_market_panel
from ..base import BaseCommand


class Command(BaseCommand):
    name = "concentration"
    help = "Write concentration.csv with one row per market-year plus summary tables."

    @stage_monitor("concentration")
    def handle(self, config, options):
        panel = read_market_panel(self.read(config.output_path(MARKET_PANEL_FILE)))
        table = concentration_table(panel)
        self.write_csv(table[CONCENTRATION_COLUMNS], config.output_path("concentration.csv"))

        summaries = [describe_concentration(table, weighting) for weighting in Weighting]
        self.write_csv(
            pd.concat(summaries, ignore_index=True),
            config.output_path("concentration_summary.csv"),
        )
        self.write_csv(yearly_means(table), config.output_path("concentration_yearly.csv"))
        self.results = {
            "cells": len(table),
            "object_kind": panel.object_kind.value,
            "mean_hhi": float(table["hhi"].mean()) if len(table) else None,
        }
