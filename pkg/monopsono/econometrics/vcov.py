"""
Sandwich covariance estimators.
"""

from typing import Optional, Tuple

import numpy as np

from monopsono.common_conf import settings
from monopsono.core.exceptions import ConfigurationError, EstimationError

CORRECTIONS = ("CR1", "CR0")
PSD_JITTER = 1e-10


def _make_psd(vcov: np.ndarray) -> np.ndarray:
    """Symmetrize and clip negative eigenvalues from rounding."""
    vcov = (vcov + vcov.T) / 2.0
    if vcov.size == 0:
        return vcov
    eigenvalues, eigenvectors = np.linalg.eigh(vcov)
    if eigenvalues.min() >= 0:
        return vcov
    scale = max(float(np.abs(eigenvalues).max()), 1.0)
    if eigenvalues.min() < -PSD_JITTER * scale:
        raise EstimationError("Covariance matrix is not positive semi-definite")
    clipped = np.clip(eigenvalues, 0.0, None)
    return (eigenvectors * clipped) @ eigenvectors.T


def cluster_vcov(
    regressors: np.ndarray,
    residuals: np.ndarray,
    clusters: np.ndarray,
    weights: Optional[np.ndarray] = None,
    correction: Optional[str] = None,
    bread: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, int]:
    """
    Liang-Zeger cluster-robust covariance.

    ``regressors`` is the matrix whose scores enter the meat (the
    second-stage design for 2SLS). CR1 scales by (G/(G-1))((N-1)/(N-K)),
    CR0 applies no small-sample factor. Returns the covariance and the
    cluster count G.
    """
    correction = (correction or settings.CLUSTER_CORRECTION).upper()
    if correction not in CORRECTIONS:
        raise ConfigurationError(
            f"Unknown cluster correction '{correction}', expected one of {CORRECTIONS}"
        )
    n, k = regressors.shape
    codes = np.asarray(clusters)
    g = int(np.unique(codes).size)
    if g < 2:
        raise EstimationError("Cluster-robust covariance needs at least 2 clusters")
    w = np.ones(n) if weights is None else weights
    if bread is None:
        bread = np.linalg.inv(regressors.T @ (regressors * w[:, None]))
    scores = regressors * (w * residuals)[:, None]
    _, dense = np.unique(codes, return_inverse=True)
    summed = np.zeros((g, k))
    np.add.at(summed, dense, scores)
    meat = summed.T @ summed
    vcov = bread @ meat @ bread
    if correction == "CR1":
        vcov = vcov * (g / (g - 1)) * ((n - 1) / (n - k))
    return _make_psd(vcov), g


def classical_vcov(
    regressors: np.ndarray,
    residuals: np.ndarray,
    dof: int,
    weights: Optional[np.ndarray] = None,
    bread: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Homoskedastic covariance s^2 (X'X)^-1 with s^2 = SSR / dof."""
    if dof <= 0:
        raise EstimationError("No residual degrees of freedom left")
    w = np.ones(residuals.size) if weights is None else weights
    if bread is None:
        bread = np.linalg.inv(regressors.T @ (regressors * w[:, None]))
    sigma2 = float(np.sum(w * residuals**2)) / dof
    return _make_psd(sigma2 * bread)
