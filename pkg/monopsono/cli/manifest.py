"""
Machine-readable run manifests.

A manifest lists a subcommand's inputs and outputs with SHA-256 digests,
its parameters and the versions of the numerical stack. It carries no
timestamps, so identical runs produce identical manifests.
"""

import hashlib
import json
from importlib import metadata
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Optional

from monopsono.debug.logger import StructuredLogger, _jsonable
from monopsono.export.utils import atomic_write

STACK = ("monopsono", "numpy", "scipy", "pandas", "networkx", "joblib")
CHUNK_SIZE = 1 << 20


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(CHUNK_SIZE), b""):
            digest.update(chunk)
    return digest.hexdigest()


def package_versions() -> Dict[str, Optional[str]]:
    versions = {}
    for name in STACK:
        try:
            versions[name] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name] = None
    return versions


def _file_entries(paths: Iterable[Path]):
    entries = []
    for path in sorted({Path(p) for p in paths}, key=str):
        entries.append(
            {
                "path": str(path),
                "sha256": file_sha256(path) if path.exists() else None,
            }
        )
    return entries


def build_manifest(
    subcommand: str,
    inputs: Iterable[Path],
    outputs: Iterable[Path],
    parameters: Mapping[str, Any],
    results: Optional[Mapping[str, Any]] = None,
) -> Dict[str, Any]:
    return {
        "subcommand": subcommand,
        "inputs": _file_entries(inputs),
        "outputs": _file_entries(outputs),
        "parameters": _jsonable(dict(parameters)),
        "results": _jsonable(dict(results or {})),
        "versions": package_versions(),
    }


def write_manifest(out_dir: Path, manifest: Mapping[str, Any]) -> Path:
    """Write ``manifest_<subcommand>.json`` and log it."""
    path = Path(out_dir) / f"manifest_{manifest['subcommand']}.json"
    with atomic_write(path) as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True, allow_nan=False)
        handle.write("\n")
    StructuredLogger(__name__).log_manifest(manifest)
    return path
