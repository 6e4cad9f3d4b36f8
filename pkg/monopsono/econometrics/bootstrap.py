"""
Pairs cluster bootstrap.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from monopsono.common_conf import settings
from monopsono.core.exceptions import BootstrapError, MonopsonoError
from monopsono.debug.core.categories import Categories
from monopsono.decorators.logging import log_exceptions

logger = Categories.get_logger(__name__, Categories.ESTIMATION)

REPLICATE_FAILURES = (MonopsonoError, np.linalg.LinAlgError)


@dataclass(frozen=True)
class BootstrapResult:
    """Replicate statistics and their standard deviation."""

    se: np.ndarray
    replicates: np.ndarray
    failures: int

    @property
    def scalar_se(self) -> float:
        return float(np.ravel(self.se)[0])


def resample_clusters(
    data: pd.DataFrame,
    cluster: str,
    rng: np.random.Generator,
    relabel: Sequence[str] = (),
) -> pd.DataFrame:
    """
    Draw clusters with replacement and stack their rows.

    Each draw gets a fresh label in ``cluster`` and in every ``relabel``
    column, so a cluster drawn twice counts as two clusters (and its
    nested fixed-effect groups as distinct groups).
    """
    codes, _ = pd.factorize(data[cluster], sort=True)
    order = np.argsort(codes, kind="stable")
    starts = np.searchsorted(codes[order], np.arange(codes.max() + 2))
    g = starts.size - 1
    drawn = rng.integers(0, g, size=g)
    pieces = [order[starts[c] : starts[c + 1]] for c in drawn]
    rows = np.concatenate(pieces)
    draw_ids = np.repeat(np.arange(g), [piece.size for piece in pieces])
    sample = data.iloc[rows].reset_index(drop=True)
    for column in dict.fromkeys([cluster, *relabel]):
        sample[column] = sample[column].astype(str) + "#" + draw_ids.astype(str)
    return sample


def cluster_bootstrap(
    estimator: Callable[[pd.DataFrame], object],
    data: pd.DataFrame,
    cluster: str,
    b: Optional[int] = None,
    seed: int = 0,
    relabel: Sequence[str] = (),
    n_jobs: Optional[int] = None,
    max_failure_share: Optional[float] = None,
) -> BootstrapResult:
    """
    Standard error of a statistic by resampling whole clusters.

    Replicate r uses the r-th child of ``SeedSequence(seed)``, so results
    do not depend on ``n_jobs``. Replicates whose estimator raises an
    estimation or domain error are dropped; more than ``max_failure_share``
    failures raise ``BootstrapError``.
    """
    b = settings.BOOTSTRAP_REPLICATIONS if b is None else b
    n_jobs = settings.THREADS if n_jobs is None else n_jobs
    max_failure_share = (
        settings.BOOTSTRAP_MAX_FAILURE_SHARE if max_failure_share is None else max_failure_share
    )
    if b < 2:
        raise BootstrapError(0, b)
    if data[cluster].nunique() < 2:
        raise BootstrapError(b, b)

    children = np.random.SeedSequence(seed).spawn(b)

    @log_exceptions(
        logger_name=f"{__name__}.replicate",
        reraise=False,
        catch=REPLICATE_FAILURES,
        level=logging.DEBUG,
    )
    def replicate(child):
        sample = resample_clusters(data, cluster, np.random.default_rng(child), relabel)
        return np.atleast_1d(np.asarray(estimator(sample), dtype=float))

    results = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(replicate)(child) for child in children
    )
    kept = [result for result in results if result is not None]
    failures = b - len(kept)
    if failures > max_failure_share * b or len(kept) < 2:
        raise BootstrapError(failures, b)
    if failures:
        logger.info(f"Dropped {failures} of {b} bootstrap replicates")
    replicates = np.vstack(kept)
    return BootstrapResult(
        se=replicates.std(axis=0, ddof=1), replicates=replicates, failures=failures
    )
