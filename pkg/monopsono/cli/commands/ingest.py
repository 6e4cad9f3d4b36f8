"""
Parse input files into the market and establishment panels.
"""

from monopsono.data_model import (
    build_estab_panel,
    build_market_panel,
    mobility_terciles,
    outward_mobility,
    parse_controls_file,
    parse_delineation_file,
    parse_minwage_file,
    parse_sector_file,
    parse_snapshot_file,
)
from monopsono.debug.core.categories import Categories
from monopsono.decorators.performance import stage_monitor

from ..artifacts import DELINEATION_FILE, ESTAB_PANEL_FILE, MARKET_PANEL_FILE
from ..base import BaseCommand

logger = Categories.get_logger(__name__, Categories.PIPELINE)


class Command(BaseCommand):
    name = "ingest"
    help = "Build market_panel.csv and estab_panel.csv from worker snapshots."

    def delineation(self, config):
        """District to zone map from the configured source, or None for district markets."""
        if config.delineation_source == "none":
            return None
        if config.delineation_source == "computed":
            return parse_delineation_file(self.read(config.output_path(DELINEATION_FILE)))
        if config.paths.get("delineation") or config.optional_input("delineation"):
            return parse_delineation_file(self.read(config.input_path("delineation")))
        logger.info("No delineation file found; districts are the zones")
        return None

    @stage_monitor("ingest")
    def handle(self, config, options):
        records = parse_snapshot_file(self.read(config.input_path("snapshots")))
        sectors = parse_sector_file(self.read(config.input_path("sectors")))
        schedule = parse_minwage_file(self.read(config.input_path("minwage")))
        controls_path = config.optional_input("controls")
        controls = parse_controls_file(self.read(controls_path)) if controls_path else None
        delineation = self.delineation(config)

        market_panel = build_market_panel(
            records, delineation, config.industry_digits, config.object_kind
        )
        estab_panel = build_estab_panel(records, sectors, schedule, market_panel, controls)
        mobility = outward_mobility(records, delineation, config.industry_digits)

        frame = estab_panel.to_frame()
        frame["mobility_group"] = mobility_terciles(frame, mobility)
        self.write_csv(market_panel.to_frame(), config.output_path(MARKET_PANEL_FILE))
        self.write_csv(frame, config.output_path(ESTAB_PANEL_FILE))
        self.write_csv(mobility, config.output_path("mobility.csv"))

        self.logger.log_skip_report(self.name, estab_panel.skip_report)
        self.results = {
            "cells": len(market_panel.cells),
            "establishment_years": len(frame),
            "omitted_years": market_panel.omitted_years,
            "skipped": estab_panel.skip_report,
        }
