"""
Minimum-wage and concentration specifications and elasticity objects.
"""

from .assemble import assemble_spec, hhi_band
from .config import PRESETS, SpecConfig, get_preset
from .elasticity import (
    ElasticityCurve,
    band_curves,
    band_elasticity_grid,
    delta_method_ratio,
    elasticity_at,
    elasticity_grid,
    labor_supply_elasticity,
    normalize_closure_effect,
    quintile_curves,
    ratio_elasticity,
    zero_crossing,
)
from .instrument import leave_one_out_instrument

__all__ = [
    "ElasticityCurve",
    "PRESETS",
    "SpecConfig",
    "assemble_spec",
    "band_curves",
    "band_elasticity_grid",
    "delta_method_ratio",
    "elasticity_at",
    "elasticity_grid",
    "get_preset",
    "hhi_band",
    "labor_supply_elasticity",
    "leave_one_out_instrument",
    "normalize_closure_effect",
    "quintile_curves",
    "ratio_elasticity",
    "zero_crossing",
]
