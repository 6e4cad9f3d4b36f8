"""
Regression frames and their demeaned numeric designs.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from monopsono.core.exceptions import ConfigurationError, EmptySampleError

CONSTANT = "const"


@dataclass(frozen=True)
class RegressionFrame:
    """
    Named columns of a panel regression.

    ``exog`` are exogenous regressors, ``endog`` endogenous regressors and
    ``instruments`` the excluded instruments. ``fe`` lists categorical
    columns absorbed as fixed effects and ``cluster`` the column defining
    clusters for inference. ``groups`` maps the term prefix of a categorical
    interaction to its populated levels; the first level is the reference
    and has no term of its own.
    """

    data: pd.DataFrame
    y: str
    exog: List[str] = field(default_factory=list)
    endog: List[str] = field(default_factory=list)
    instruments: List[str] = field(default_factory=list)
    fe: List[str] = field(default_factory=list)
    cluster: Optional[str] = None
    weights: Optional[str] = None
    groups: Dict[str, List[int]] = field(default_factory=dict)

    def __post_init__(self):
        missing = [c for c in self.columns if c not in self.data.columns]
        if missing:
            raise ConfigurationError(f"Regression frame lacks column(s): {missing}")
        if self.endog and len(self.instruments) < len(self.endog):
            raise ConfigurationError(
                f"{len(self.instruments)} instrument(s) for "
                f"{len(self.endog)} endogenous regressor(s)"
            )
        if not self.endog and self.instruments:
            raise ConfigurationError("Instruments given without endogenous regressors")
        numeric = [self.y, *self.exog, *self.endog, *self.instruments]
        if self.weights:
            numeric.append(self.weights)
        values = self.data[numeric].to_numpy(dtype=float)
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("Regression frame contains missing or infinite values")
        keys = [*self.fe] + ([self.cluster] if self.cluster else [])
        if keys and self.data[keys].isna().any().any():
            raise ConfigurationError("Fixed-effect or cluster column has missing values")
        if self.weights and (self.data[self.weights] < 0).any():
            raise ConfigurationError("Weights must be non-negative")

    @property
    def columns(self) -> List[str]:
        cols = [self.y, *self.exog, *self.endog, *self.instruments, *self.fe]
        if self.cluster:
            cols.append(self.cluster)
        if self.weights:
            cols.append(self.weights)
        return list(dict.fromkeys(cols))

    @property
    def n(self) -> int:
        return len(self.data)

    def with_data(self, data: pd.DataFrame) -> "RegressionFrame":
        return replace(self, data=data)

    def with_outcome(self, values: np.ndarray, name: str) -> "RegressionFrame":
        """Copy with ``name`` added as the outcome column."""
        return replace(self, data=self.data.assign(**{name: values}), y=name)


@dataclass(frozen=True)
class DemeanedFrame:
    """Numeric design after fixed-effect absorption (or with a constant)."""

    y: np.ndarray
    X: np.ndarray
    W: np.ndarray
    Z: np.ndarray
    exog_names: List[str]
    endog_names: List[str]
    instrument_names: List[str]
    clusters: Optional[np.ndarray]
    weights: Optional[np.ndarray]
    dof_fe: int = 0
    iterations: int = 0

    @property
    def n(self) -> int:
        return int(self.y.shape[0])

    @property
    def names(self) -> List[str]:
        return [*self.exog_names, *self.endog_names]

    def with_y(self, y: np.ndarray) -> "DemeanedFrame":
        return replace(self, y=np.asarray(y, dtype=float))


def _matrix(data: pd.DataFrame, columns: List[str]) -> np.ndarray:
    if not columns:
        return np.zeros((len(data), 0))
    return data[columns].to_numpy(dtype=float)


def cluster_codes(frame: RegressionFrame) -> Optional[np.ndarray]:
    if not frame.cluster:
        return None
    codes, _ = pd.factorize(frame.data[frame.cluster], sort=True)
    return codes


def design_from_frame(frame: RegressionFrame, add_constant: bool = True) -> DemeanedFrame:
    """Numeric design without fixed effects, optionally with an intercept."""
    if frame.n == 0:
        raise EmptySampleError("Regression frame has no observations")
    X = _matrix(frame.data, frame.exog)
    names = list(frame.exog)
    if add_constant:
        X = np.column_stack([np.ones(frame.n), X])
        names = [CONSTANT, *names]
    return DemeanedFrame(
        y=frame.data[frame.y].to_numpy(dtype=float),
        X=X,
        W=_matrix(frame.data, frame.endog),
        Z=_matrix(frame.data, frame.instruments),
        exog_names=names,
        endog_names=list(frame.endog),
        instrument_names=list(frame.instruments),
        clusters=cluster_codes(frame),
        weights=frame.data[frame.weights].to_numpy(dtype=float) if frame.weights else None,
    )
