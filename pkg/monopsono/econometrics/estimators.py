"""
OLS and two-stage least squares on demeaned designs.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from scipy import stats

from monopsono.common_conf import settings
from monopsono.core.exceptions import (
    CollinearityError,
    EmptySampleError,
    EstimationError,
    WeakInstrumentError,
)
from monopsono.debug.core.categories import Categories
from monopsono.decorators.logging import log_function_call

from .absorb import absorb_fixed_effects
from .frame import DemeanedFrame, RegressionFrame, design_from_frame
from .vcov import classical_vcov, cluster_vcov

logger = Categories.get_logger(__name__, Categories.ESTIMATION)

ANNIHILATED = 1e-7


@dataclass(frozen=True)
class FitResult:
    """Coefficients, covariance and diagnostics of one regression."""

    names: List[str]
    beta: np.ndarray
    vcov: np.ndarray
    n: int
    k: int
    g: Optional[int]
    r2_within: float
    dof: int
    method: str
    residuals: np.ndarray = field(repr=False)
    first_stage_f: Optional[float] = None
    first_stage: Dict[str, pd.Series] = field(default_factory=dict, repr=False)
    dof_fe: int = 0
    groups: Dict[str, List[int]] = field(default_factory=dict, repr=False)

    @property
    def params(self) -> pd.Series:
        return pd.Series(self.beta, index=self.names)

    @property
    def se(self) -> pd.Series:
        return pd.Series(np.sqrt(np.diag(self.vcov)), index=self.names)

    def coef(self, name: str) -> float:
        return float(self.beta[self._index(name)])

    def std_error(self, name: str) -> float:
        i = self._index(name)
        return float(np.sqrt(self.vcov[i, i]))

    def covariance(self, first: str, second: str) -> float:
        return float(self.vcov[self._index(first), self._index(second)])

    def _index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"No coefficient named '{name}'") from None

    def critical_value(self, level: Optional[float] = None) -> float:
        level = settings.CONLEY_LEVEL if level is None else level
        return float(stats.t.ppf(1 - (1 - level) / 2, self.dof))

    def confidence_interval(self, name: str, level: Optional[float] = None):
        half = self.critical_value(level) * self.std_error(name)
        estimate = self.coef(name)
        return estimate - half, estimate + half

    def summary(self, level: float = 0.95) -> pd.DataFrame:
        """Coefficient table with t statistics, p values and confidence bounds."""
        se = np.sqrt(np.diag(self.vcov))
        with np.errstate(divide="ignore", invalid="ignore"):
            t = self.beta / se
        critical = self.critical_value(level)
        return pd.DataFrame(
            {
                "term": self.names,
                "coefficient": self.beta,
                "se": se,
                "t": t,
                "p": 2 * stats.t.sf(np.abs(t), self.dof),
                "lo": self.beta - critical * se,
                "hi": self.beta + critical * se,
            }
        )

    def diagnostics(self) -> Dict[str, object]:
        return {
            "method": self.method,
            "n": self.n,
            "k": self.k,
            "g": self.g,
            "dof": self.dof,
            "dof_fe": self.dof_fe,
            "r2_within": self.r2_within,
            "first_stage_f": self.first_stage_f,
        }


def check_rank(matrix: np.ndarray, names: List[str]) -> None:
    """Raise ``CollinearityError`` naming the first column adding no rank."""
    n, k = matrix.shape
    if k == 0:
        return
    norms = np.sqrt(np.sum(matrix**2, axis=0))
    annihilated = norms < ANNIHILATED * np.sqrt(max(n, 1))
    if annihilated.any():
        raise CollinearityError(names[int(np.argmax(annihilated))])
    scaled = matrix / norms
    if k > n or np.linalg.matrix_rank(scaled) < k:
        for j in range(k):
            if j + 1 > n or np.linalg.matrix_rank(scaled[:, : j + 1]) < j + 1:
                raise CollinearityError(names[j])


def _weighted(d: DemeanedFrame):
    if d.weights is None:
        return d.y, d.X, d.W, d.Z
    root = np.sqrt(d.weights)
    return (
        d.y * root,
        d.X * root[:, None],
        d.W * root[:, None],
        d.Z * root[:, None],
    )


def _r2(y: np.ndarray, residuals: np.ndarray) -> float:
    total = float(np.sum((y - y.mean()) ** 2))
    if total == 0:
        return 0.0
    return 1.0 - float(np.sum(residuals**2)) / total


def _vcov(d: DemeanedFrame, regressors, residuals, bread):
    """Cluster-robust when clusters are present, classical otherwise."""
    n, k = regressors.shape
    if d.clusters is not None:
        vcov, g = cluster_vcov(regressors, residuals, d.clusters, bread=bread)
        return vcov, g, g - 1
    dof = n - k - d.dof_fe
    return classical_vcov(regressors, residuals, dof, bread=bread), None, dof


def _solve(matrix: np.ndarray, target: np.ndarray) -> np.ndarray:
    solution, *_ = np.linalg.lstsq(matrix, target, rcond=None)
    return solution


def ols(d: DemeanedFrame) -> FitResult:
    """Least squares of the outcome on exogenous and endogenous columns."""
    if d.n == 0:
        raise EmptySampleError("No observations to estimate")
    y, X, W, _ = _weighted(d)
    regressors = np.hstack([X, W])
    names = d.names
    check_rank(regressors, names)
    beta = _solve(regressors, y)
    residuals = y - regressors @ beta
    bread = np.linalg.inv(regressors.T @ regressors)
    vcov, g, dof = _vcov(d, regressors, residuals, bread)
    if dof <= 0:
        raise EstimationError("No residual degrees of freedom left")
    return FitResult(
        names=names,
        beta=beta,
        vcov=vcov,
        n=d.n,
        k=len(names),
        g=g,
        r2_within=_r2(y, residuals),
        dof=dof,
        method="ols",
        residuals=residuals,
        dof_fe=d.dof_fe,
    )


def _wald_f(coefficients: np.ndarray, vcov: np.ndarray) -> float:
    q = coefficients.size
    statistic = coefficients @ np.linalg.pinv(vcov) @ coefficients
    return float(statistic / q)


def tsls(d: DemeanedFrame) -> FitResult:
    """
    Two-stage least squares.

    The first stage projects the endogenous columns on exogenous columns
    and instruments; residuals use the structural regressors. The
    first-stage F is the Wald F of the excluded instruments with the same
    covariance estimator as the main fit, minimized over endogenous
    columns.
    """
    if not d.endog_names:
        raise EstimationError("tsls needs at least one endogenous regressor")
    if d.n == 0:
        raise EmptySampleError("No observations to estimate")
    y, X, W, Z = _weighted(d)
    kx = X.shape[1]
    first = np.hstack([X, Z])
    try:
        check_rank(first, [*d.exog_names, *d.instrument_names])
    except CollinearityError as e:
        raise WeakInstrumentError(f"First stage is rank deficient: {e}") from e

    pi = _solve(first, W)
    if kx:
        Z_partial = Z - X @ _solve(X, Z)
    else:
        Z_partial = Z
    if np.linalg.matrix_rank(Z_partial @ pi[kx:, :]) < W.shape[1]:
        raise WeakInstrumentError("Instruments do not identify the endogenous regressors")

    fitted = first @ pi
    second = np.hstack([X, fitted])
    names = d.names
    check_rank(second, names)
    beta = _solve(second, y)
    residuals = y - np.hstack([X, W]) @ beta
    bread = np.linalg.inv(second.T @ second)
    vcov, g, dof = _vcov(d, second, residuals, bread)
    if dof <= 0:
        raise EstimationError("No residual degrees of freedom left")

    first_bread = np.linalg.inv(first.T @ first)
    first_names = [*d.exog_names, *d.instrument_names]
    f_values = []
    first_stage = {}
    for e, endog in enumerate(d.endog_names):
        first_residuals = W[:, e] - fitted[:, e]
        first_vcov, _, _ = _vcov(d, first, first_residuals, first_bread)
        f_values.append(_wald_f(pi[kx:, e], first_vcov[kx:, kx:]))
        first_stage[endog] = pd.Series(pi[:, e], index=first_names)
    first_stage_f = min(f_values)
    logger.debug(f"2SLS on {d.n} rows, first-stage F={first_stage_f:.2f}")

    return FitResult(
        names=names,
        beta=beta,
        vcov=vcov,
        n=d.n,
        k=len(names),
        g=g,
        r2_within=_r2(y, residuals),
        dof=dof,
        method="tsls",
        residuals=residuals,
        first_stage_f=first_stage_f,
        first_stage=first_stage,
        dof_fe=d.dof_fe,
    )


def reduced_form(d: DemeanedFrame) -> FitResult:
    """OLS of the outcome on exogenous columns and excluded instruments."""
    return ols(
        replace(
            d,
            X=np.hstack([d.X, d.Z]),
            W=np.zeros((d.n, 0)),
            exog_names=[*d.exog_names, *d.instrument_names],
            endog_names=[],
        )
    )


def prepare(frame: RegressionFrame) -> DemeanedFrame:
    """Absorb fixed effects, or add an intercept when there are none."""
    if frame.fe:
        return absorb_fixed_effects(frame)
    return design_from_frame(frame)


@log_function_call(category=Categories.ESTIMATION, failure_level=logging.DEBUG)
def estimate(frame: RegressionFrame) -> FitResult:
    """Fit a frame by 2SLS when it has endogenous columns, OLS otherwise."""
    d = prepare(frame)
    fit = tsls(d) if d.endog_names else ols(d)
    return replace(fit, groups=dict(frame.groups))
