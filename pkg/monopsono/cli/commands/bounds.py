"""
Conley bounds for a just-identified IV specification.
"""

import pandas as pd

from monopsono.common_conf import settings
from monopsono.decorators.performance import stage_monitor
from monopsono.econometrics import conley_bounds

from ..base import BaseCommand

DEFAULT_SPEC = "eq2_iv"


class Command(BaseCommand):
    name = "bounds"
    help = "Write bounds.csv (per-phi intervals) and bounds_summary.csv."

    def add_arguments(self, parser):
        parser.add_argument("--phi-min", dest="phi_min", type=float, help="Lower end of the phi range")
        parser.add_argument("--phi-max", dest="phi_max", type=float, help="Upper end of the phi range")
        parser.add_argument("--grid-points", dest="grid_points", type=int, help="Number of phi values")

    def settings_for(self, config, options):
        phi_min = options.phi_min if options.phi_min is not None else config.phi_min
        phi_max = options.phi_max if options.phi_max is not None else config.phi_max
        points = options.grid_points or config.phi_points or settings.CONLEY_GRID_POINTS
        return phi_min, phi_max, points

    def parameters(self, config, options):
        phi_min, phi_max, points = self.settings_for(config, options)
        return {
            **config.parameters(),
            "spec": config.spec or DEFAULT_SPEC,
            "phi_min": phi_min,
            "phi_max": phi_max,
            "grid_points": points,
            "level": settings.CONLEY_LEVEL,
        }

    @stage_monitor("bounds")
    def handle(self, config, options):
        spec = config.spec_config(config.spec or DEFAULT_SPEC)
        phi_min, phi_max, points = self.settings_for(config, options)
        result = conley_bounds(
            self.regression_frame(config, spec),
            phi_min=phi_min,
            phi_max=phi_max,
            grid_points=points,
            n_jobs=config.threads,
        )
        self.write_csv(result.grid, config.output_path("bounds.csv"))
        summary = pd.DataFrame(
            [
                {
                    "spec": spec.name,
                    "phi_min": float(result.grid["phi"].min()),
                    "phi_max": float(result.grid["phi"].max()),
                    "theta_lo": result.theta_lo,
                    "theta_hi": result.theta_hi,
                    "phi_negative": result.phi_negative,
                    "level": settings.CONLEY_LEVEL,
                }
            ]
        )
        self.write_csv(summary, config.output_path("bounds_summary.csv"))
        self.results = {
            "theta_lo": result.theta_lo,
            "theta_hi": result.theta_hi,
            "phi_negative": result.phi_negative,
        }
