"""
Minimum-wage elasticities over a grid of HHI values.

Usage:
    monopsono elasticity --out run --spec eq4_linear --grid 0:1:0.05
    monopsono elasticity --out run --spec eq4_bands
    monopsono elasticity --out run --spec eq4_linear --wage-spec eq4_linear_wage --bootstrap 50
"""

import numpy as np
import pandas as pd

from monopsono.core.enums import Design, Interaction
from monopsono.decorators.performance import stage_monitor
from monopsono.econometrics import estimate
from monopsono.minwage_analysis import (
    ElasticityCurve,
    band_curves,
    band_elasticity_grid,
    delta_method_ratio,
    elasticity_grid,
    labor_supply_elasticity,
    quintile_curves,
    ratio_elasticity,
    zero_crossing,
)

from ..artifacts import ESTAB_PANEL_FILE, read_estab_panel
from ..base import BaseCommand
from ..config import parse_grid

DEFAULT_SPEC = "eq4_linear"


class Command(BaseCommand):
    name = "elasticity"
    help = "Write elasticities.csv (and elasticity_ratio.csv with a wage spec)."

    def add_arguments(self, parser):
        parser.add_argument("--grid", help="HHI grid as start:stop:step or a comma list")
        parser.add_argument("--wage-spec", dest="wage_spec", help="Wage specification for ratios")
        parser.add_argument(
            "--bootstrap", type=int, help="Cluster bootstrap replications for the ratio"
        )

    def grid(self, config, options):
        return parse_grid(options.grid) if options.grid else config.grid

    def parameters(self, config, options):
        return {
            **config.parameters(),
            "spec": config.spec or DEFAULT_SPEC,
            "wage_spec": options.wage_spec or config.wage_spec,
            "grid": self.grid(config, options),
            "bootstrap": self.replications(config, options),
        }

    def replications(self, config, options):
        return options.bootstrap if options.bootstrap is not None else config.bootstrap

    @stage_monitor("elasticity")
    def handle(self, config, options):
        spec = config.spec_config(config.spec or DEFAULT_SPEC)
        grid = self.grid(config, options)
        panel = read_estab_panel(self.read(config.output_path(ESTAB_PANEL_FILE)))
        fit = estimate(self.regression_frame(config, spec, panel))

        wage_name = options.wage_spec or config.wage_spec
        if spec.design is Design.CONCENTRATION_EQ2:
            self.concentration_ratio(config, spec, fit, panel, wage_name)
            return

        if spec.interaction is Interaction.KAITZ_QUINTILES_TRIPLE:
            tables = []
            for quintile, curve in quintile_curves(fit).items():
                table = elasticity_grid(curve, grid, dof=fit.dof)
                table.insert(0, "quintile", quintile)
                tables.append(table)
            self.write_csv(pd.concat(tables, ignore_index=True), config.output_path("elasticities.csv"))
            self.results = {"quintiles": len(tables)}
            return

        if spec.interaction is Interaction.HHI_BANDS:
            table = band_elasticity_grid(fit, grid)
            self.write_csv(table, config.output_path("elasticities.csv"))
            self.results = {"bands": len(band_curves(fit))}
            return

        curve = ElasticityCurve.from_fit(fit)
        self.write_csv(
            elasticity_grid(curve, grid, dof=fit.dof), config.output_path("elasticities.csv")
        )
        self.results = {
            "alpha": curve.alpha,
            "beta": curve.beta,
            "zero_crossing": zero_crossing(curve),
        }
        if wage_name:
            wage_spec = config.spec_config(wage_name)
            wage_curve = ElasticityCurve.from_fit(
                estimate(self.regression_frame(config, wage_spec, panel))
            )
            b = self.replications(config, options)
            ratio = ratio_elasticity(
                curve,
                wage_curve,
                grid,
                panel=panel if b > 0 else None,
                emp_config=spec,
                wage_config=wage_spec,
                b=b,
                seed=config.seed,
                n_jobs=config.threads,
            )
            se = ratio["se_bootstrap"]
            table = pd.DataFrame(
                {
                    "hhi": grid,
                    "ratio": ratio["value"],
                    "se_bootstrap": np.full(len(grid), np.nan) if se is None else se,
                }
            )
            self.write_csv(table, config.output_path("elasticity_ratio.csv"))

    def concentration_ratio(self, config, spec, fit, panel, wage_name):
        """Employment over wage response to concentration for the concentration design."""
        term = f"log_{spec.concentration_index.value}"
        self.results = {"coefficient": fit.coef(term), "se": fit.std_error(term)}
        if not wage_name:
            return
        wage_fit = estimate(self.regression_frame(config, config.spec_config(wage_name), panel))
        emp, wage = fit.coef(term), wage_fit.coef(term)
        value = labor_supply_elasticity(emp, wage)
        se = delta_method_ratio(emp, wage, fit.std_error(term) ** 2, wage_fit.std_error(term) ** 2)
        table = pd.DataFrame(
            [{"term": term, "employment": emp, "wage": wage, "ratio": value, "se": se}]
        )
        self.write_csv(table, config.output_path("labor_supply_elasticity.csv"))
        self.results.update({"labor_supply_elasticity": value, "labor_supply_se": se})
