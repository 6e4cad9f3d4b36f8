"""
High-dimensional fixed-effect absorption by alternating projections.
"""

from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from monopsono.common_conf import settings
from monopsono.core.exceptions import ConfigurationError, ConvergenceError, EmptySampleError
from monopsono.debug.core.categories import Categories

from .frame import DemeanedFrame, RegressionFrame, _matrix, cluster_codes

logger = Categories.get_logger(__name__, Categories.ESTIMATION)


def factor_codes(data: pd.DataFrame, fe: List[str]) -> List[np.ndarray]:
    """Dense integer codes per fixed-effect column."""
    return [pd.factorize(data[column], sort=True)[0] for column in fe]


def group_means(
    values: np.ndarray, codes: np.ndarray, weights: Optional[np.ndarray] = None
) -> np.ndarray:
    """(Weighted) mean of each column within each group, expanded back to rows."""
    groups = int(codes.max()) + 1
    w = np.ones(codes.size) if weights is None else weights
    totals = np.bincount(codes, weights=w, minlength=groups)
    totals = np.where(totals > 0, totals, 1.0)
    means = np.empty((groups, values.shape[1]))
    for column in range(values.shape[1]):
        means[:, column] = np.bincount(
            codes, weights=w * values[:, column], minlength=groups
        ) / totals
    return means[codes]


def demean(
    values: np.ndarray,
    codes: List[np.ndarray],
    weights: Optional[np.ndarray] = None,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> Tuple[np.ndarray, int]:
    """
    Project columns onto the orthogonal complement of all factor indicators.

    A single factor is demeaned exactly in one pass. Several factors are
    swept in turn until the largest absolute change of a sweep falls below
    ``tol``.
    """
    tol = settings.DEMEAN_TOL if tol is None else tol
    max_iter = settings.DEMEAN_MAX_ITER if max_iter is None else max_iter
    result = np.array(values, dtype=float, copy=True)
    if result.shape[1] == 0 or not codes:
        return result, 0
    if len(codes) == 1:
        return result - group_means(result, codes[0], weights), 1

    change = np.inf
    for iteration in range(1, max_iter + 1):
        previous = result.copy()
        for factor in codes:
            result -= group_means(result, factor, weights)
        change = float(np.max(np.abs(result - previous)))
        if change < tol:
            return result, iteration
    raise ConvergenceError(change, max_iter)


def fixed_effect_dof(codes: List[np.ndarray]) -> int:
    """
    Degrees of freedom absorbed by the fixed effects.

    Exact for one or two factors (two factors lose one level per connected
    component of their bipartite graph); further factors each lose one
    redundant level.
    """
    if not codes:
        return 0
    levels = [int(c.max()) + 1 for c in codes]
    if len(codes) == 1:
        return levels[0]
    first, second = codes[0], codes[1]
    graph = sparse.coo_matrix(
        (np.ones(first.size), (first, second + levels[0])),
        shape=(levels[0] + levels[1], levels[0] + levels[1]),
    )
    components, _ = connected_components(graph, directed=False)
    dof = levels[0] + levels[1] - components
    return dof + sum(level - 1 for level in levels[2:])


def absorb_fixed_effects(
    frame: RegressionFrame,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> DemeanedFrame:
    """Demean outcome, regressors and instruments over every fixed effect."""
    if not frame.fe:
        raise ConfigurationError("absorb_fixed_effects needs at least one fixed effect")
    if frame.n == 0:
        raise EmptySampleError("Regression frame has no observations")
    data = frame.data
    weights = data[frame.weights].to_numpy(dtype=float) if frame.weights else None
    blocks = [
        data[[frame.y]].to_numpy(dtype=float),
        _matrix(data, frame.exog),
        _matrix(data, frame.endog),
        _matrix(data, frame.instruments),
    ]
    widths = np.cumsum([0] + [block.shape[1] for block in blocks])
    codes = factor_codes(data, frame.fe)
    demeaned, iterations = demean(np.hstack(blocks), codes, weights, tol, max_iter)
    logger.debug(
        f"Absorbed {len(frame.fe)} fixed effect(s) on {frame.n} rows "
        f"in {iterations} iteration(s)"
    )
    y, X, W, Z = (demeaned[:, widths[i] : widths[i + 1]] for i in range(4))
    return DemeanedFrame(
        y=y[:, 0],
        X=X,
        W=W,
        Z=Z,
        exog_names=list(frame.exog),
        endog_names=list(frame.endog),
        instrument_names=list(frame.instruments),
        clusters=cluster_codes(frame),
        weights=weights,
        dof_fe=fixed_effect_dof(codes),
        iterations=iterations,
    )
