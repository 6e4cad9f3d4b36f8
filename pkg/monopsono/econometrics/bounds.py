"""
Plausibly exogenous bounds by the union of confidence intervals.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from monopsono.common_conf import settings
from monopsono.core.exceptions import ConfigurationError

from .estimators import prepare, reduced_form, tsls
from .frame import RegressionFrame


@dataclass(frozen=True)
class ConleyBounds:
    """Envelope of the per-phi intervals and the phi grid they came from."""

    theta_lo: float
    theta_hi: float
    phi_negative: Optional[float]
    grid: pd.DataFrame


def default_phi_range(frame: RegressionFrame):
    """Range between zero and the reduced-form coefficient of the instrument."""
    d = prepare(frame)
    gamma = reduced_form(d).coef(d.instrument_names[0])
    return min(0.0, gamma), max(0.0, gamma)


def conley_bounds(
    frame: RegressionFrame,
    phi_min: Optional[float] = None,
    phi_max: Optional[float] = None,
    grid_points: Optional[int] = None,
    level: Optional[float] = None,
    term: Optional[str] = None,
    n_jobs: Optional[int] = None,
) -> ConleyBounds:
    """
    Bounds on the endogenous coefficient allowing the instrument a direct effect.

    For each phi on an even grid over [phi_min, phi_max] the 2SLS interval
    of the outcome net of phi times the instrument is computed; the bounds
    are the envelope of those intervals. ``phi_negative`` is the phi of
    largest magnitude whose upper bound is still below zero, if any.
    """
    if len(frame.instruments) != 1:
        raise ConfigurationError("Conley bounds need exactly one excluded instrument")
    if phi_min is None or phi_max is None:
        low, high = default_phi_range(frame)
        phi_min = low if phi_min is None else phi_min
        phi_max = high if phi_max is None else phi_max
    if phi_min > phi_max:
        raise ConfigurationError(f"phi_min {phi_min} exceeds phi_max {phi_max}")
    grid_points = settings.CONLEY_GRID_POINTS if grid_points is None else grid_points
    level = settings.CONLEY_LEVEL if level is None else level
    n_jobs = settings.THREADS if n_jobs is None else n_jobs

    d = prepare(frame)
    term = term or d.endog_names[0]
    instrument = d.Z[:, 0]
    phis = np.linspace(phi_min, phi_max, grid_points)

    def interval(phi):
        fit = tsls(d.with_y(d.y - phi * instrument))
        lo, hi = fit.confidence_interval(term, level)
        return phi, fit.coef(term), lo, hi

    rows = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(interval)(phi) for phi in phis)
    grid = pd.DataFrame(rows, columns=["phi", "theta", "lo", "hi"])

    negative = grid[grid["hi"] < 0]
    phi_negative = None
    if not negative.empty:
        phi_negative = float(negative.loc[negative["phi"].abs().idxmax(), "phi"])
    return ConleyBounds(
        theta_lo=float(grid["lo"].min()),
        theta_hi=float(grid["hi"].max()),
        phi_negative=phi_negative,
        grid=grid,
    )
