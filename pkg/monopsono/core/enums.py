"""
Enums shared across the data, estimation and simulation layers.
"""

from enum import Enum


class Contract(Enum):
    """Contract type of an employment spell."""

    REGULAR_FT = "regular_ft"
    REGULAR_PT = "regular_pt"
    MARGINAL = "marginal"
    APPRENTICE = "apprentice"


class ObjectKind(Enum):
    """Object whose shares define a labor-market cell."""

    EMPLOYMENT = "employment"
    HIRES = "hires"


class Territory(Enum):
    """Minimum-wage territory."""

    WEST = "west"
    EAST = "east"
    BERLIN = "berlin"


class Band(Enum):
    """Antitrust concentration band of an HHI value."""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class Regime(Enum):
    """Labor-market regime under a minimum wage."""

    FREE = "free"
    UNCONSTRAINED = "unconstrained"
    SUPPLY_DETERMINED = "supply_determined"
    DEMAND_DETERMINED = "demand_determined"


class Design(Enum):
    """Regression design family."""

    CONCENTRATION_EQ2 = "concentration_eq2"
    MINWAGE_EQ4 = "minwage_eq4"


class FeScheme(Enum):
    """Fixed-effect scheme absorbed by a regression."""

    ESTAB = "estab"
    ESTAB_YEAR = "estab+year"
    ESTAB_ZONE_YEAR = "estab+zone_year"


class Interaction(Enum):
    """Minimum-wage interaction variant."""

    NONE = "none"
    LINEAR_HHI = "linear_hhi"
    HHI_BANDS = "hhi_bands"
    KAITZ_QUINTILES_TRIPLE = "kaitz_quintiles_triple"
    AKM_EXTRA = "akm_extra"


class HhiSource(Enum):
    """Which HHI measure interacts with the minimum wage."""

    AVG = "avg"
    PREDETERMINED = "predetermined"
    CURRENT = "current"


class ConcentrationIndex(Enum):
    """Concentration index columns carried on the establishment panel."""

    HHI = "hhi"
    RBI = "rbi"
    CR1 = "cr1"
    INS = "ins"
    EXP = "exp"


class Weighting(Enum):
    """Weighting scheme for concentration summaries."""

    MARKETS = "markets"
    WORKERS = "workers"
    ESTABLISHMENTS = "establishments"
