"""
Batch pipeline driver.
"""

from .config import PipelineConfig, load_pipeline_config, parse_grid
from .main import build_parser, main, run

__all__ = ["PipelineConfig", "build_parser", "load_pipeline_config", "main", "parse_grid", "run"]
