"""
Estimate one regression specification.

Usage:
    monopsono regress --out run --spec eq2_iv
"""

import pandas as pd

from monopsono.decorators.performance import stage_monitor
from monopsono.econometrics import estimate

from ..base import BaseCommand

SUMMARY_LEVEL = 0.95


def fit_filename(spec_name: str) -> str:
    return f"fit_{spec_name}.csv"


class Command(BaseCommand):
    name = "regress"
    help = "Write fit_<spec>.csv (coefficients) and vcov_<spec>.csv for one specification."

    def parameters(self, config, options):
        return {**config.parameters(), "spec_config": config.spec_config().to_dict()}

    @stage_monitor("regress")
    def handle(self, config, options):
        spec = config.spec_config()
        fit = estimate(self.regression_frame(config, spec))
        self.write_csv(fit.summary(SUMMARY_LEVEL), config.output_path(fit_filename(spec.name)))
        vcov = pd.DataFrame(fit.vcov, columns=fit.names)
        vcov.insert(0, "term", fit.names)
        self.write_csv(vcov, config.output_path(f"vcov_{spec.name}.csv"))
        diagnostics = pd.DataFrame(
            {"key": list(fit.diagnostics()), "value": list(fit.diagnostics().values())}
        )
        self.write_csv(diagnostics, config.output_path(f"diagnostics_{spec.name}.csv"))
        self.results = fit.diagnostics()
