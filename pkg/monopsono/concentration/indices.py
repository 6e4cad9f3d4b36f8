"""
Concentration indices over a vector of firm shares.

All indices lie in (0, 1], equal 1/J for J equal shares and are invariant
to permutations of the shares. Equal-share vectors short-circuit to an
exact 1/J so the identities hold without rounding.
"""

from typing import Dict, Optional, Sequence

import numpy as np

from monopsono.common_conf import settings
from monopsono.core.enums import Band
from monopsono.core.exceptions import DomainError


def as_share_vector(shares: Sequence[float]) -> np.ndarray:
    """Validate and return shares as a float array."""
    vector = np.asarray(shares, dtype=float).ravel()
    if vector.size == 0:
        raise DomainError("Share vector is empty")
    if np.any(~np.isfinite(vector)) or np.any(vector <= 0) or np.any(vector > 1):
        raise DomainError("Shares must lie in (0, 1]")
    tolerance = max(settings.SHARE_TOLERANCE, vector.size * np.finfo(float).eps)
    if abs(vector.sum() - 1.0) > tolerance:
        raise DomainError(f"Shares sum to {vector.sum():.15g}, expected 1")
    return vector


def _uniform(vector: np.ndarray) -> bool:
    return bool(vector.max() == vector.min())


def hhi(shares: Sequence[float]) -> float:
    """Herfindahl-Hirschman index: sum of squared shares."""
    vector = as_share_vector(shares)
    if _uniform(vector):
        return 1.0 / vector.size
    return float(np.sum(vector * vector))


def rosenbluth(shares: Sequence[float]) -> float:
    """
    Rosenbluth index 1 / (2 * sum(e_j * j) - 1).

    Ranks are 1-based after a stable descending sort, so ties keep input order.
    """
    vector = as_share_vector(shares)
    if _uniform(vector):
        return 1.0 / vector.size
    ordered = vector[np.argsort(-vector, kind="stable")]
    ranks = np.arange(1, ordered.size + 1)
    return float(1.0 / (2.0 * np.sum(ordered * ranks) - 1.0))


def concentration_ratio(shares: Sequence[float], k: Optional[int] = None) -> float:
    """Sum of the ``k`` largest shares, exactly 1 when ``k`` >= J."""
    k = settings.CONCENTRATION_K if k is None else k
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    vector = as_share_vector(shares)
    if k >= vector.size:
        return 1.0
    ordered = np.sort(vector)[::-1]
    return float(min(1.0, np.sum(ordered[: int(k)])))


def inverse_number(j: int) -> float:
    """Inverse number of firms 1/J."""
    if int(j) != j or j < 1:
        raise DomainError(f"Firm count must be a positive integer, got {j}")
    return 1.0 / int(j)


def exponential_index(shares: Sequence[float]) -> float:
    """Exponential index prod(e_j ** e_j) = exp(-entropy)."""
    vector = as_share_vector(shares)
    if _uniform(vector):
        return 1.0 / vector.size
    return float(np.exp(np.sum(vector * np.log(vector))))


def equivalent_number(index: float) -> float:
    """Number of equal-sized firms producing the given index value."""
    if not np.isfinite(index) or index <= 0:
        raise DomainError(f"Index must be positive, got {index}")
    return 1.0 / index


def classify_band(value: float, edges: Optional[Sequence[float]] = None) -> Band:
    """
    Antitrust band of an HHI value.

    Bands are left-closed: low below the first edge, medium up to but
    excluding the second, high from the second edge on.
    """
    if not np.isfinite(value) or value < 0 or value > 1 + settings.SHARE_TOLERANCE:
        raise DomainError(f"HHI must lie in [0, 1], got {value}")
    low_edge, high_edge = edges or settings.CONCENTRATION_BAND_EDGES
    if value < low_edge:
        return Band.LOW
    if value < high_edge:
        return Band.MEDIUM
    return Band.HIGH


def adelman_components(shares: Sequence[float]) -> Dict[str, float]:
    """
    Decompose the HHI into firm count and share dispersion.

    ``hhi == j * variance + 1 / j`` with the population variance of shares.
    """
    vector = as_share_vector(shares)
    j = vector.size
    variance = float(np.var(vector))
    return {"j": j, "variance": variance, "hhi": j * variance + 1.0 / j}


def weighted_percentile(
    values: Sequence[float], weights: Sequence[float], q: float
) -> float:
    """
    Weighted percentile by cumulative-weight inversion.

    Returns the smallest value whose cumulative weight share reaches ``q``
    (lower interpolation); ``q`` is a fraction in [0, 1].
    """
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    order = np.argsort(values, kind="stable")
    cumulative = np.cumsum(weights[order])
    total = cumulative[-1]
    position = np.searchsorted(cumulative / total, q - 1e-12, side="left")
    return float(values[order][min(position, values.size - 1)])


def weighted_summary(
    values: Sequence[float],
    weights: Optional[Sequence[float]] = None,
    edges: Optional[Sequence[float]] = None,
) -> Dict[str, float]:
    """
    Weighted mean, quartiles and band shares of a set of index values.

    ``share_medium`` and ``share_high`` are the weight shares falling into the
    medium and high bands under the left-closed convention.
    """
    values = np.asarray(values, dtype=float)
    weights = np.ones_like(values) if weights is None else np.asarray(weights, dtype=float)
    if values.shape != weights.shape:
        raise DomainError("values and weights must have equal lengths")
    if values.size == 0:
        raise DomainError("Cannot summarize an empty set of values")
    if np.any(weights < 0):
        raise DomainError("Weights must be non-negative")
    total = weights.sum()
    if total <= 0:
        raise DomainError("Total weight must be positive")
    low_edge, high_edge = edges or settings.CONCENTRATION_BAND_EDGES
    medium = (values >= low_edge) & (values < high_edge)
    high = values >= high_edge
    return {
        "mean": float(np.sum(values * weights) / total),
        "p25": weighted_percentile(values, weights, 0.25),
        "p50": weighted_percentile(values, weights, 0.50),
        "p75": weighted_percentile(values, weights, 0.75),
        "share_medium": float(weights[medium].sum() / total),
        "share_high": float(weights[high].sum() / total),
    }
