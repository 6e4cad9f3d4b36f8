"""
Pipeline configuration from an INI file and command-line flags.

The file has a ``[paths]`` section with input locations, a ``[pipeline]``
section with shared options, ``[synth]`` and ``[simulate]`` sections for
the generators and one ``[spec:NAME]`` section per regression
specification. Flags given on the command line win over file values.
"""

import configparser
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

from monopsono.common_conf import settings
from monopsono.core.enums import ObjectKind
from monopsono.core.exceptions import ConfigurationError
from monopsono.minwage_analysis.config import SpecConfig, get_preset

INPUT_FILES = {
    "snapshots": "snapshots.csv",
    "sectors": "sectors.csv",
    "minwage": "minwage.csv",
    "controls": "controls.csv",
    "flows": "flows.csv",
    "delineation": "delineation_truth.csv",
}
DIGIT_CHOICES = (3, 4, 5)
DELINEATION_SOURCES = ("file", "computed", "none")


def parse_grid(text: str) -> List[float]:
    """
    Parse a grid written as ``start:stop:step`` or as a comma list.

    The range form includes ``stop`` when it falls on the grid.
    """
    text = str(text).strip()
    try:
        if ":" in text:
            start, stop, step = (float(part) for part in text.split(":"))
            if step <= 0:
                raise ConfigurationError(f"Grid step must be positive in '{text}'")
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + i * step, 12) for i in range(max(count, 0))]
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError(f"Invalid grid '{text}'") from None


def _as_int(section: str, key: str, value: Any) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"[{section}] {key} must be an integer, got '{value}'") from None


@dataclass
class PipelineConfig:
    """Inputs, output directory and options shared by every subcommand."""

    out_dir: Path = Path("out")
    paths: Dict[str, Optional[Path]] = field(default_factory=dict)
    industry_digits: int = 4
    object_kind: ObjectKind = ObjectKind.EMPLOYMENT
    delineation_source: str = "file"
    seed: int = 0
    threads: int = field(default_factory=lambda: int(settings.THREADS))
    spec: Optional[str] = None
    wage_spec: Optional[str] = None
    grid: List[float] = field(default_factory=lambda: parse_grid("0:1:0.05"))
    bootstrap: int = 0
    phi_min: Optional[float] = None
    phi_max: Optional[float] = None
    phi_points: Optional[int] = None
    specs: Dict[str, SpecConfig] = field(default_factory=dict)
    synth: Dict[str, str] = field(default_factory=dict)
    simulate: Dict[str, str] = field(default_factory=dict)
    source: Optional[Path] = None

    def __post_init__(self):
        self.out_dir = Path(self.out_dir)
        if self.industry_digits not in DIGIT_CHOICES:
            raise ConfigurationError(
                f"digits must be one of {list(DIGIT_CHOICES)}, got {self.industry_digits}"
            )
        try:
            self.object_kind = ObjectKind(self.object_kind)
        except ValueError:
            raise ConfigurationError(
                f"object must be one of {[kind.value for kind in ObjectKind]}, "
                f"got '{self.object_kind}'"
            ) from None
        if self.delineation_source not in DELINEATION_SOURCES:
            raise ConfigurationError(
                f"delineation_source must be one of {list(DELINEATION_SOURCES)}, "
                f"got '{self.delineation_source}'"
            )
        if self.threads < 1:
            raise ConfigurationError("threads must be at least 1")

    def input_path(self, name: str) -> Path:
        """Configured input path, or the default file name in the output directory."""
        configured = self.paths.get(name)
        return Path(configured) if configured else self.out_dir / INPUT_FILES[name]

    def optional_input(self, name: str) -> Optional[Path]:
        path = self.input_path(name)
        return path if path.exists() else None

    def output_path(self, filename: str) -> Path:
        return self.out_dir / filename

    def spec_config(self, name: Optional[str] = None) -> SpecConfig:
        """Spec from a ``[spec:NAME]`` section, else the preset of that name."""
        name = name or self.spec
        if not name:
            raise ConfigurationError("No specification selected; pass --spec NAME")
        if name in self.specs:
            return self.specs[name]
        return get_preset(name)

    def parameters(self) -> Dict[str, Any]:
        """Options recorded in run manifests."""
        return {
            "industry_digits": self.industry_digits,
            "object_kind": self.object_kind.value,
            "delineation_source": self.delineation_source,
            "seed": self.seed,
            "threads": self.threads,
            "spec": self.spec,
        }


PIPELINE_KEYS = {
    "out": "out_dir",
    "digits": "industry_digits",
    "object": "object_kind",
    "delineation_source": "delineation_source",
    "seed": "seed",
    "threads": "threads",
    "spec": "spec",
    "wage_spec": "wage_spec",
    "grid": "grid",
    "bootstrap": "bootstrap",
    "phi_min": "phi_min",
    "phi_max": "phi_max",
    "phi_points": "phi_points",
}
INTEGER_KEYS = {"industry_digits", "seed", "threads", "bootstrap", "phi_points"}
FLOAT_KEYS = {"phi_min", "phi_max"}


def _convert(key: str, value: Any) -> Any:
    if value is None:
        return None
    if key in INTEGER_KEYS:
        return _as_int("pipeline", key, value)
    if key in FLOAT_KEYS:
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"[pipeline] {key} must be a number, got '{value}'") from None
    if key == "grid" and isinstance(value, str):
        return parse_grid(value)
    return value


def load_pipeline_config(
    path: Optional[Path] = None, overrides: Optional[Mapping[str, Any]] = None
) -> PipelineConfig:
    """
    Read a pipeline config file and apply flag overrides.

    ``overrides`` uses the ``[pipeline]`` key names; ``None`` values are
    ignored so unset flags keep the file values.
    """
    values: Dict[str, Any] = {}
    paths: Dict[str, Optional[Path]] = {}
    specs: Dict[str, SpecConfig] = {}
    sections: Dict[str, Dict[str, str]] = {"synth": {}, "simulate": {}}

    if path is not None:
        parser = configparser.ConfigParser(interpolation=None)
        try:
            with open(path, encoding="utf-8") as handle:
                parser.read_file(handle)
        except OSError as e:
            raise ConfigurationError(f"Cannot read config file '{path}': {e.strerror}") from None
        except configparser.Error as e:
            raise ConfigurationError(f"Malformed config file '{path}': {e}") from None
        base = Path(path).parent
        for section in parser.sections():
            items = dict(parser.items(section))
            if section == "paths":
                for key, raw in items.items():
                    if key not in INPUT_FILES:
                        raise ConfigurationError(f"Unknown input '{key}' in [paths]")
                    paths[key] = (base / raw) if raw else None
            elif section == "pipeline":
                for key, raw in items.items():
                    if key not in PIPELINE_KEYS:
                        raise ConfigurationError(f"Unknown key '{key}' in [pipeline]")
                    values[PIPELINE_KEYS[key]] = raw
                if "out_dir" in values:
                    values["out_dir"] = base / values["out_dir"]
            elif section.startswith("spec:"):
                name = section.split(":", 1)[1].strip()
                items.setdefault("name", name)
                specs[name] = SpecConfig.from_mapping(items)
            elif section in sections:
                sections[section] = items
            else:
                raise ConfigurationError(f"Unknown config section [{section}]")

    for key, value in (overrides or {}).items():
        if value is not None:
            values[PIPELINE_KEYS.get(key, key)] = value

    converted = {key: _convert(key, value) for key, value in values.items()}
    return PipelineConfig(
        paths=paths,
        specs=specs,
        synth=sections["synth"],
        simulate=sections["simulate"],
        source=Path(path) if path is not None else None,
        **converted,
    )
