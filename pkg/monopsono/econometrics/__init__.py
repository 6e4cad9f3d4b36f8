"""
Fixed-effects OLS and 2SLS with cluster-robust inference.
"""

from .absorb import absorb_fixed_effects, demean, fixed_effect_dof
from .bootstrap import BootstrapResult, cluster_bootstrap, resample_clusters
from .bounds import ConleyBounds, conley_bounds, default_phi_range
from .estimators import FitResult, estimate, ols, prepare, reduced_form, tsls
from .frame import CONSTANT, DemeanedFrame, RegressionFrame, design_from_frame
from .vcov import classical_vcov, cluster_vcov

__all__ = [
    "BootstrapResult",
    "CONSTANT",
    "ConleyBounds",
    "DemeanedFrame",
    "FitResult",
    "RegressionFrame",
    "absorb_fixed_effects",
    "classical_vcov",
    "cluster_bootstrap",
    "cluster_vcov",
    "conley_bounds",
    "default_phi_range",
    "demean",
    "design_from_frame",
    "estimate",
    "fixed_effect_dof",
    "ols",
    "prepare",
    "reduced_form",
    "resample_clusters",
    "tsls",
]
