"""
Test utilities: input files, random shares, planted flows and oracles.
"""

import csv
import io
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd

from monopsono.data_model.records import (
    MINWAGE_COLUMNS,
    SECTOR_COLUMNS,
    SNAPSHOT_COLUMNS,
)
from monopsono.delineation.flows import FlowMatrix, Partition


def create_csv_file(directory, filename, headers, rows) -> Path:
    """Write a CSV file for parser and pipeline tests."""
    path = Path(directory) / filename
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(headers)
        for row in rows:
            writer.writerow(row)
    return path


def create_snapshot_file(directory, records: Sequence[Dict], filename="snapshots.csv") -> Path:
    rows = [[record.get(column, "") for column in SNAPSHOT_COLUMNS] for record in records]
    return create_csv_file(directory, filename, SNAPSHOT_COLUMNS, rows)


def create_sector_file(directory, mapping: Dict[str, str], filename="sectors.csv") -> Path:
    return create_csv_file(directory, filename, SECTOR_COLUMNS, sorted(mapping.items()))


def create_minwage_file(directory, rows=(), filename="minwage.csv") -> Path:
    return create_csv_file(directory, filename, MINWAGE_COLUMNS, rows)


def snapshot_frame(records: Sequence[Dict]) -> pd.DataFrame:
    """Parsed-snapshot table built directly from dicts."""
    frame = pd.DataFrame(list(records), columns=SNAPSHOT_COLUMNS)
    frame["year"] = frame["year"].astype("int64")
    frame["daily_wage"] = frame["daily_wage"].astype(float)
    frame["apprentice"] = frame["contract"] == "apprentice"
    return frame


def random_shares(rng: np.random.Generator, max_firms: int = 50) -> np.ndarray:
    j = int(rng.integers(1, max_firms + 1))
    return rng.dirichlet(np.ones(j))


def planted_flows(
    blocks: int, size: int, inside: float = 100.0, outside: float = 1.0, stay: float = 1000.0
) -> Tuple[FlowMatrix, Partition]:
    """Block-diagonal commuting matrix with ``blocks`` equal blocks of ``size`` districts."""
    n = blocks * size
    regions = [f"{i:05d}" for i in range(n)]
    block = np.repeat(np.arange(blocks), size)
    flows = np.where(block[:, None] == block[None, :], inside, outside)
    np.fill_diagonal(flows, stay)
    truth = Partition({region: int(b) for region, b in zip(regions, block)})
    return FlowMatrix(regions, flows), truth


def disconnected_flows(blocks: int, size: int) -> Tuple[FlowMatrix, Partition]:
    """Blocks with no commuting between them."""
    return planted_flows(blocks, size, inside=10.0, outside=0.0, stay=1.0)


def dummy_ols(data: pd.DataFrame, y: str, x: List[str], fe: List[str]) -> np.ndarray:
    """Coefficients on ``x`` from least squares with explicit fixed-effect dummies."""
    parts = [data[x].to_numpy(dtype=float)]
    for position, factor in enumerate(fe):
        dummies = pd.get_dummies(data[factor].astype(str), drop_first=position > 0)
        parts.append(dummies.to_numpy(dtype=float))
    if not fe:
        parts.append(np.ones((len(data), 1)))
    design = np.hstack(parts)
    beta, *_ = np.linalg.lstsq(design, data[y].to_numpy(dtype=float), rcond=None)
    return beta[: len(x)]


def naive_cluster_vcov(regressors, residuals, clusters, correction="CR1") -> np.ndarray:
    """Cluster sandwich accumulated pair by pair within clusters."""
    n, k = regressors.shape
    bread = np.linalg.inv(regressors.T @ regressors)
    meat = np.zeros((k, k))
    clusters = np.asarray(clusters)
    for i in range(n):
        for j in range(n):
            if clusters[i] == clusters[j]:
                meat += np.outer(regressors[i], regressors[j]) * residuals[i] * residuals[j]
    vcov = bread @ meat @ bread
    if correction == "CR1":
        g = np.unique(clusters).size
        vcov *= (g / (g - 1)) * ((n - 1) / (n - k))
    return vcov


@contextmanager
def capture_logs(logger_name, level=logging.DEBUG):
    """Capture log messages for testing."""
    log_capture = io.StringIO()
    handler = logging.StreamHandler(log_capture)
    handler.setLevel(level)

    logger = logging.getLogger(logger_name)
    original_level = logger.level
    logger.setLevel(level)
    logger.addHandler(handler)

    try:
        yield log_capture
    finally:
        logger.removeHandler(handler)
        logger.setLevel(original_level)


def assert_log_contains(log_output, expected_text):
    """Assert log output contains expected text."""
    content = (
        log_output.getvalue() if hasattr(log_output, "getvalue") else str(log_output)
    )
    assert (
        expected_text in content
    ), f"Expected '{expected_text}' in log output: {content}"
