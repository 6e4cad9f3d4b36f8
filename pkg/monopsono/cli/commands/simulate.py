"""
Minimum-wage responses of Cournot oligopsonies with different firm counts.

Usage:
    monopsono simulate --out run --firms 1,2,5 --wmin-grid 0:12:0.25
"""

import pandas as pd

from monopsono.core.exceptions import ConfigurationError
from monopsono.decorators.performance import stage_monitor
from monopsono.oligopsony_sim import (
    OligopsonyEconomy,
    competitive_equilibrium,
    cournot_equilibrium,
    firm_supply_elasticity,
    markdown,
    response_table,
)

from ..base import BaseCommand
from ..config import parse_grid

DEFAULTS = {"a": "0", "b": "1", "c": "10", "d": "0", "firms": "1,2,5", "wmin_grid": "0:12:0.25"}


class Command(BaseCommand):
    name = "simulate"
    help = "Write response_curve.csv and equilibria.csv for a family of oligopsony economies."

    def add_arguments(self, parser):
        parser.add_argument("--firms", help="Comma list of firm counts")
        parser.add_argument("--wmin-grid", dest="wmin_grid", help="Minimum-wage grid")

    def model(self, config, options):
        values = {**DEFAULTS, **config.simulate}
        unknown = set(values) - set(DEFAULTS)
        if unknown:
            raise ConfigurationError(f"Unknown key(s) in [simulate]: {sorted(unknown)}")
        if options.firms:
            values["firms"] = options.firms
        if options.wmin_grid:
            values["wmin_grid"] = options.wmin_grid
        try:
            curve = {key: float(values[key]) for key in ("a", "b", "c", "d")}
            firms = [int(part) for part in values["firms"].split(",") if part.strip()]
        except ValueError as e:
            raise ConfigurationError(f"Invalid [simulate] value: {e}") from None
        return curve, firms, parse_grid(values["wmin_grid"])

    def parameters(self, config, options):
        curve, firms, grid = self.model(config, options)
        return {**curve, "firms": firms, "wmin_grid": grid}

    @stage_monitor("simulate")
    def handle(self, config, options):
        curve, firms, grid = self.model(config, options)
        economies = [OligopsonyEconomy(j=j, **curve) for j in firms]
        self.write_csv(response_table(economies, grid), config.output_path("response_curve.csv"))

        rows = []
        for econ in economies:
            free = cournot_equilibrium(econ)
            competitive = competitive_equilibrium(econ)
            rows.append(
                {
                    "j": econ.j,
                    "wage": free.wage,
                    "employment": free.employment_total,
                    "employment_per_firm": free.employment_per_firm,
                    "competitive_wage": competitive.wage,
                    "competitive_employment": competitive.employment_total,
                    "markdown": markdown(econ),
                    "supply_elasticity": firm_supply_elasticity(econ),
                }
            )
        self.write_csv(pd.DataFrame(rows), config.output_path("equilibria.csv"))
        self.results = {"economies": len(economies), "grid_points": len(grid)}
