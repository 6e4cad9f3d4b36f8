"""
Symmetric Cournot oligopsony with linear labor supply and linear MRPL.

Market labor supply is w = a + b L. Each of the J firms has marginal
revenue product c - d l in its own employment l, so aggregate demand
scales with J and J = 1 is the textbook monopsony.
"""

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np
import pandas as pd

from monopsono.core.enums import Regime
from monopsono.core.exceptions import DomainError


@dataclass(frozen=True)
class OligopsonyEconomy:
    """Linear supply and MRPL curves shared by ``j`` symmetric firms."""

    a: float
    b: float
    c: float
    d: float
    j: int = 1

    def __post_init__(self):
        if self.c < self.a:
            raise DomainError(f"MRPL intercept c={self.c} is below supply intercept a={self.a}")
        if self.b < 0 or self.d < 0:
            raise DomainError("Slopes b and d must be non-negative")
        if self.b == 0 and self.d == 0:
            raise DomainError("b = 0 needs a downward-sloping MRPL (d > 0)")
        if int(self.j) != self.j or self.j < 1:
            raise DomainError(f"Firm count must be a positive integer, got {self.j}")
        object.__setattr__(self, "j", int(self.j))

    def with_firms(self, j: int) -> "OligopsonyEconomy":
        return replace(self, j=j)

    def supply_wage(self, employment: float) -> float:
        return self.a + self.b * employment

    def mrpl(self, employment_per_firm: float) -> float:
        return self.c - self.d * employment_per_firm


@dataclass(frozen=True)
class EquilibriumPoint:
    wage: float
    employment_total: float
    employment_per_firm: float
    regime: Regime


def _point(econ: OligopsonyEconomy, wage: float, per_firm: float, regime: Regime):
    return EquilibriumPoint(
        wage=float(wage),
        employment_total=float(econ.j * per_firm),
        employment_per_firm=float(per_firm),
        regime=regime,
    )


def cournot_equilibrium(econ: OligopsonyEconomy) -> EquilibriumPoint:
    """Symmetric Cournot point from c - d l = a + b J l + b l."""
    per_firm = (econ.c - econ.a) / (econ.d + econ.b * (econ.j + 1))
    return _point(econ, econ.supply_wage(econ.j * per_firm), per_firm, Regime.FREE)


def monopsony_equilibrium(econ: OligopsonyEconomy) -> EquilibriumPoint:
    """Cournot point of the same curves with a single firm."""
    return cournot_equilibrium(econ.with_firms(1))


def competitive_equilibrium(econ: OligopsonyEconomy) -> EquilibriumPoint:
    """Wage-taking firms: c - d l = w on market supply w = a + b J l."""
    per_firm = (econ.c - econ.a) / (econ.d + econ.b * econ.j)
    return _point(econ, econ.supply_wage(econ.j * per_firm), per_firm, Regime.FREE)


def minwage_response(econ: OligopsonyEconomy, wmin: float) -> EquilibriumPoint:
    """
    Equilibrium under a wage floor.

    Floors up to the Cournot wage leave the outcome unchanged
    (unconstrained). Floors up to the competitive wage put employment on
    the supply curve (supply determined); higher floors put it on
    aggregate wage-taking demand (demand determined), which is zero for a
    flat MRPL above c.
    """
    if wmin < 0:
        raise DomainError(f"Minimum wage must be non-negative, got {wmin}")
    free = cournot_equilibrium(econ)
    if wmin <= free.wage:
        return replace(free, regime=Regime.UNCONSTRAINED)
    competitive = competitive_equilibrium(econ)
    if wmin <= competitive.wage:
        total = (wmin - econ.a) / econ.b
        return _point(econ, wmin, total / econ.j, Regime.SUPPLY_DETERMINED)
    per_firm = max(0.0, (econ.c - wmin) / econ.d) if econ.d > 0 else 0.0
    return _point(econ, wmin, per_firm, Regime.DEMAND_DETERMINED)


def response_curve(econ: OligopsonyEconomy, grid: Sequence[float]) -> pd.DataFrame:
    """Wage and employment changes relative to the free Cournot outcome."""
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) < 0):
        raise DomainError("Minimum-wage grid must be sorted ascending")
    free = cournot_equilibrium(econ)
    rows = []
    for wmin in grid:
        point = minwage_response(econ, float(wmin))
        rows.append(
            {
                "j": econ.j,
                "wmin": float(wmin),
                "d_wage": point.wage - free.wage,
                "d_employment": point.employment_total - free.employment_total,
                "d_employment_per_firm": point.employment_per_firm - free.employment_per_firm,
                "regime": point.regime.value,
            }
        )
    return pd.DataFrame(rows)


def response_table(
    economies: Iterable[OligopsonyEconomy], grid: Sequence[float]
) -> pd.DataFrame:
    """Response curves of several economies stacked in ``j, wmin`` order."""
    frames = [response_curve(econ, grid) for econ in economies]
    table = pd.concat(frames, ignore_index=True)
    return table.sort_values(["j", "wmin"], kind="mergesort").reset_index(drop=True)[
        ["j", "wmin", "d_wage", "d_employment", "regime"]
    ]


def markdown(econ: OligopsonyEconomy) -> float:
    """(MRPL - w) / w at the Cournot point."""
    point = cournot_equilibrium(econ)
    if point.wage <= 0:
        raise DomainError("Markdown is undefined at a zero wage")
    return (econ.mrpl(point.employment_per_firm) - point.wage) / point.wage


def firm_supply_elasticity(econ: OligopsonyEconomy) -> float:
    """
    Elasticity w / (b l) of the residual labor supply a firm faces at the Cournot point.

    It equals the market supply elasticity w / (b L) when J = 1.
    """
    point = cournot_equilibrium(econ)
    if econ.b == 0:
        return float("inf")
    if point.employment_per_firm <= 0:
        raise DomainError("Supply elasticity is undefined at zero employment")
    return point.wage / (econ.b * point.employment_per_firm)
