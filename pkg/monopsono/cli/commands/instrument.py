"""
Leave-one-out concentration instrument per labor-market cell.
"""

from monopsono.decorators.performance import stage_monitor
from monopsono.minwage_analysis import leave_one_out_instrument

from ..artifacts import INSTRUMENT_FILE, MARKET_PANEL_FILE, read_market_panel
from ..base import BaseCommand


class Command(BaseCommand):
    name = "instrument"
    help = "Write instrument.csv: mean log inverse firm count of the industry in other zones."

    @stage_monitor("instrument")
    def handle(self, config, options):
        panel = read_market_panel(self.read(config.output_path(MARKET_PANEL_FILE)))
        table = leave_one_out_instrument(panel)
        self.write_csv(table, config.output_path(INSTRUMENT_FILE))
        self.results = {
            "cells": len(table),
            "without_instrument": int(table["loo_ins"].isna().sum()),
        }
