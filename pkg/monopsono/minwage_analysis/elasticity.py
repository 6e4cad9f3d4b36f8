"""
Elasticity functions of concentration and their ratios.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from scipy import stats

from monopsono.common_conf import settings
from monopsono.core.exceptions import DomainError, NonBindingMinimumWageError
from monopsono.econometrics.bootstrap import cluster_bootstrap
from monopsono.econometrics.estimators import FitResult, estimate

from .assemble import (
    BAND_PREFIX,
    CLUSTER_COLUMN,
    LOG_MW,
    LOG_MW_X_HHI,
    QUINTILE_PREFIX,
    QUINTILE_SLOPE_PREFIX,
    assemble_spec,
    hhi_band,
)
from .config import SpecConfig

HhiValue = Union[float, Sequence[float], np.ndarray]


@dataclass(frozen=True)
class ElasticityCurve:
    """Elasticity eta(hhi) = alpha + beta * hhi with the covariance of (alpha, beta)."""

    alpha: float
    beta: float
    vcov_ab: np.ndarray = None

    def __post_init__(self):
        vcov = np.zeros((2, 2)) if self.vcov_ab is None else np.asarray(self.vcov_ab, dtype=float)
        if vcov.shape != (2, 2):
            raise DomainError("vcov_ab must be 2x2")
        if not np.allclose(vcov, vcov.T, rtol=0, atol=1e-12):
            raise DomainError("vcov_ab must be symmetric")
        if np.any(np.diag(vcov) < 0):
            raise DomainError("vcov_ab must have a non-negative diagonal")
        object.__setattr__(self, "vcov_ab", vcov)

    @classmethod
    def from_fit(
        cls, fit: FitResult, main: str = LOG_MW, interaction: Optional[str] = LOG_MW_X_HHI
    ) -> "ElasticityCurve":
        """Curve from a fit; without an interaction term the slope is zero."""
        if interaction is None or interaction not in fit.names:
            return cls(fit.coef(main), 0.0, np.diag([fit.std_error(main) ** 2, 0.0]))
        vcov = np.array(
            [
                [fit.covariance(main, main), fit.covariance(main, interaction)],
                [fit.covariance(interaction, main), fit.covariance(interaction, interaction)],
            ]
        )
        return cls(fit.coef(main), fit.coef(interaction), vcov)

    def eta(self, hhi: HhiValue) -> np.ndarray:
        return self.alpha + self.beta * np.asarray(hhi, dtype=float)


def _check_hhi(hhi: HhiValue) -> np.ndarray:
    values = np.asarray(hhi, dtype=float)
    if np.any(~np.isfinite(values)) or np.any(values < 0) or np.any(values > 1):
        raise DomainError(f"HHI must lie in [0, 1], got {hhi}")
    return values


def elasticity_at(curve: ElasticityCurve, hhi: float) -> Dict[str, float]:
    """Elasticity and its delta-method standard error at one HHI value."""
    value = float(_check_hhi(hhi))
    gradient = np.array([1.0, value])
    variance = float(gradient @ curve.vcov_ab @ gradient)
    return {"eta": curve.alpha + curve.beta * value, "se": float(np.sqrt(max(variance, 0.0)))}


def elasticity_grid(
    curve: ElasticityCurve,
    grid: Sequence[float],
    level: Optional[float] = None,
    dof: Optional[int] = None,
) -> pd.DataFrame:
    """
    Elasticity with confidence bounds over a grid of HHI values.

    Bounds use t(dof) critical values, or the normal when ``dof`` is None.
    Columns are ``hhi, eta, se, lo<level>, hi<level>``.
    """
    level = settings.CONLEY_LEVEL if level is None else level
    critical = (
        stats.norm.ppf(1 - (1 - level) / 2)
        if dof is None
        else stats.t.ppf(1 - (1 - level) / 2, dof)
    )
    rows = [{"hhi": float(h), **elasticity_at(curve, h)} for h in grid]
    table = pd.DataFrame(rows, columns=["hhi", "eta", "se"])
    suffix = f"{round(level * 100):d}"
    table[f"lo{suffix}"] = table["eta"] - critical * table["se"]
    table[f"hi{suffix}"] = table["eta"] + critical * table["se"]
    return table


def zero_crossing(curve: ElasticityCurve) -> Optional[float]:
    """HHI at which the elasticity changes sign, None for a flat curve."""
    if curve.beta == 0:
        return None
    return -curve.alpha / curve.beta


def _populated_levels(fit: FitResult, prefix: str, levels: Sequence[int]) -> List[int]:
    """
    Populated levels of a categorical interaction, reference first.

    Fits from ``estimate`` carry them from assembly. For other fits the
    reference is taken to be the lowest level without a term.
    """
    if prefix in fit.groups:
        return list(fit.groups[prefix])
    shifted = sorted(
        int(name[len(prefix) :])
        for name in fit.names
        if name.startswith(prefix) and name[len(prefix) :].isdigit()
    )
    unshifted = [level for level in levels if level not in shifted]
    if not unshifted:
        raise DomainError(f"Every level of '{prefix}' has a term: no reference level")
    return [unshifted[0], *shifted]


def _combined_curve(
    fit: FitResult, intercept: Sequence[str], slope: Sequence[str]
) -> ElasticityCurve:
    """Curve whose intercept and slope are sums of named coefficients."""
    weights = np.zeros((2, len(fit.names)))
    for row, terms in enumerate((intercept, slope)):
        for name in terms:
            weights[row, fit.names.index(name)] = 1.0
    alpha, beta = weights @ fit.beta
    vcov = weights @ fit.vcov @ weights.T
    return ElasticityCurve(float(alpha), float(beta), (vcov + vcov.T) / 2)


def quintile_curves(fit: FitResult) -> Dict[int, ElasticityCurve]:
    """
    Elasticity curve per Kaitz quintile from a triple-interaction fit.

    The reference quintile (the lowest populated one) uses the main terms;
    every other populated quintile adds its own intercept and slope shifts.
    """
    reference, *shifted = _populated_levels(fit, QUINTILE_PREFIX, range(1, 6))
    curves = {reference: ElasticityCurve.from_fit(fit)}
    for quintile in shifted:
        curves[quintile] = _combined_curve(
            fit,
            [LOG_MW, f"{QUINTILE_PREFIX}{quintile}"],
            [LOG_MW_X_HHI, f"{QUINTILE_SLOPE_PREFIX}{quintile}"],
        )
    return dict(sorted(curves.items()))


def band_curves(fit: FitResult) -> Dict[int, ElasticityCurve]:
    """
    Flat elasticity curve per populated HHI band from a band-interaction fit.

    The reference band uses the main term; every other band adds its shift.
    """
    bands = len(settings.HHI_BAND_EDGES) - 1
    reference, *shifted = _populated_levels(fit, BAND_PREFIX, range(1, bands + 1))
    curves = {reference: ElasticityCurve.from_fit(fit, interaction=None)}
    for band in shifted:
        curves[band] = _combined_curve(fit, [LOG_MW, f"{BAND_PREFIX}{band}"], [])
    return dict(sorted(curves.items()))


def band_elasticity_grid(
    fit: FitResult,
    grid: Sequence[float],
    level: Optional[float] = None,
) -> pd.DataFrame:
    """
    Elasticity over a grid of HHI values from a band-interaction fit.

    Each grid value takes the curve of its band; values falling in a band
    without observations are left out. Columns are those of
    ``elasticity_grid`` preceded by ``band``.
    """
    curves = band_curves(fit)
    values = _check_hhi(np.asarray(grid, dtype=float))
    bands = hhi_band(values)
    tables = []
    for band, curve in curves.items():
        points = values[bands == band]
        if points.size:
            table = elasticity_grid(curve, points, level=level, dof=fit.dof)
            table.insert(0, "band", band)
            tables.append(table)
    if not tables:
        raise DomainError("No grid value falls in a populated HHI band")
    table = pd.concat(tables, ignore_index=True)
    return table.sort_values("hhi", kind="mergesort").reset_index(drop=True)


def _ratio(emp: ElasticityCurve, wage: ElasticityCurve, hhi: np.ndarray) -> np.ndarray:
    denominator = wage.eta(hhi)
    if np.any(np.abs(denominator) < settings.RATIO_MIN_DENOMINATOR):
        raise NonBindingMinimumWageError(
            "Wage elasticity is too close to zero: the minimum wage does not bind"
        )
    return emp.eta(hhi) / denominator


def ratio_elasticity(
    curve_emp: ElasticityCurve,
    curve_wage: ElasticityCurve,
    hhi: HhiValue,
    panel: Optional[pd.DataFrame] = None,
    emp_config: Optional[SpecConfig] = None,
    wage_config: Optional[SpecConfig] = None,
    b: Optional[int] = None,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> Dict[str, np.ndarray]:
    """
    Employment elasticity over wage elasticity at the given HHI value(s).

    With a panel and both configs the standard error comes from a cluster
    bootstrap that re-estimates both specifications on each replicate.
    """
    values = _check_hhi(hhi)
    ratio = _ratio(curve_emp, curve_wage, values)
    result = {"value": ratio, "se_bootstrap": None}
    if panel is None or emp_config is None or wage_config is None:
        return result

    def statistic(sample: pd.DataFrame) -> np.ndarray:
        emp = ElasticityCurve.from_fit(estimate(assemble_spec(sample, emp_config)))
        wage = ElasticityCurve.from_fit(estimate(assemble_spec(sample, wage_config)))
        return _ratio(emp, wage, values)

    boot = cluster_bootstrap(
        statistic,
        panel,
        CLUSTER_COLUMN,
        b=b,
        seed=seed,
        relabel=["estab_id"],
        n_jobs=n_jobs,
    )
    result["se_bootstrap"] = boot.se.reshape(np.shape(ratio))
    return result


def labor_supply_elasticity(emp_elast: float, wage_elast: float) -> float:
    """Employment response over wage response to concentration."""
    if wage_elast == 0:
        raise DomainError("Wage elasticity must be non-zero")
    return emp_elast / wage_elast


def delta_method_ratio(a: float, b: float, var_a: float, var_b: float) -> float:
    """Standard error of a / b for independent a and b."""
    if b == 0:
        raise DomainError("Denominator must be non-zero")
    return float(np.sqrt(var_a / b**2 + a**2 * var_b / b**4))


def normalize_closure_effect(
    closure_coef: float,
    closure_interact: float,
    wage_curve: ElasticityCurve,
    hhi: float,
) -> float:
    """Closure effect per one percent effective wage increase at the given HHI."""
    value = float(_check_hhi(hhi))
    denominator = wage_curve.alpha + wage_curve.beta * value
    if abs(denominator) < settings.RATIO_MIN_DENOMINATOR:
        raise NonBindingMinimumWageError(
            "Wage elasticity is too close to zero to normalize the closure effect"
        )
    return (closure_coef + closure_interact * value) / denominator
