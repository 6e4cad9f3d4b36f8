"""
Closed-form Cournot oligopsony model and a synthetic panel generator.
"""

from .economy import (
    EquilibriumPoint,
    OligopsonyEconomy,
    competitive_equilibrium,
    cournot_equilibrium,
    firm_supply_elasticity,
    markdown,
    minwage_response,
    monopsony_equilibrium,
    response_curve,
    response_table,
)
from .synth import SynthConfig, SynthPanel, synth_panel

__all__ = [
    "EquilibriumPoint",
    "OligopsonyEconomy",
    "SynthConfig",
    "SynthPanel",
    "competitive_equilibrium",
    "cournot_equilibrium",
    "firm_supply_elasticity",
    "markdown",
    "minwage_response",
    "monopsony_equilibrium",
    "response_curve",
    "response_table",
    "synth_panel",
]
