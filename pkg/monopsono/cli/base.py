"""
Base class for pipeline subcommands.
"""

import argparse
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional

import pandas as pd

from monopsono.debug.logger import StructuredLogger
from monopsono.export import ExportService
from monopsono.minwage_analysis import SpecConfig, assemble_spec

from .artifacts import ESTAB_PANEL_FILE, INSTRUMENT_FILE, read_estab_panel, read_instrument
from .config import PipelineConfig
from .manifest import build_manifest, write_manifest


class BaseCommand:
    """
    One subcommand: ``add_arguments`` declares flags, ``handle`` runs it.

    ``handle`` registers every file it reads or writes through ``read`` and
    ``write_csv`` so ``run`` can emit the manifest afterwards.
    """

    name = ""
    help = ""

    def __init__(self):
        self.exporter = ExportService()
        self.logger = StructuredLogger(f"monopsono.cli.{self.name}")
        self.inputs: List[Path] = []
        self.outputs: List[Path] = []
        self.results: Dict[str, Any] = {}

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Subcommand-specific flags."""

    def handle(self, config: PipelineConfig, options: argparse.Namespace) -> None:
        raise NotImplementedError

    def parameters(self, config: PipelineConfig, options: argparse.Namespace) -> Mapping[str, Any]:
        return config.parameters()

    def read(self, path: Path) -> Path:
        self.inputs.append(Path(path))
        return Path(path)

    def write_csv(
        self, table: pd.DataFrame, path: Path, columns: Optional[Iterable[str]] = None
    ) -> Path:
        self.exporter.export_csv(table, path, columns=list(columns) if columns else None)
        self.outputs.append(Path(path))
        return Path(path)

    def regression_frame(self, config: PipelineConfig, spec: SpecConfig, panel: Optional[pd.DataFrame] = None):
        """Assemble a specification from the establishment panel artifact."""
        if panel is None:
            panel = read_estab_panel(self.read(config.output_path(ESTAB_PANEL_FILE)))
        instrument = None
        if spec.iv:
            instrument = read_instrument(self.read(config.output_path(INSTRUMENT_FILE)))
        return assemble_spec(panel, spec, instrument)

    def run(self, config: PipelineConfig, options: argparse.Namespace) -> Path:
        """Run the subcommand and write its manifest; returns the manifest path."""
        config.out_dir.mkdir(parents=True, exist_ok=True)
        self.logger.log_stage(self.name, "started")
        self.handle(config, options)
        manifest = build_manifest(
            self.name,
            self.inputs,
            self.outputs,
            self.parameters(config, options),
            self.results,
        )
        self.logger.log_stage(self.name, "finished", {"outputs": len(self.outputs)})
        return write_manifest(config.out_dir, manifest)
