"""
Collect earlier artifacts into one long report table.

The report only reads what other subcommands wrote; nothing is
re-estimated here.
"""

import pandas as pd

from monopsono.core.exceptions import ConfigurationError
from monopsono.decorators.performance import stage_monitor

from ..artifacts import read_text_table
from ..base import BaseCommand

REPORT_ARTIFACTS = (
    "delineation_sweep.csv",
    "concentration_summary.csv",
    "concentration_yearly.csv",
    "fit_*.csv",
    "labor_supply_elasticity.csv",
    "elasticities.csv",
    "elasticity_ratio.csv",
    "bounds_summary.csv",
    "equilibria.csv",
    "response_curve.csv",
)
REPORT_COLUMNS = ["artifact", "row", "column", "value"]


class Command(BaseCommand):
    name = "report"
    help = "Write report.csv (and report.xlsx with --xlsx) from existing artifacts."

    def add_arguments(self, parser):
        parser.add_argument(
            "--xlsx", action="store_true", help="Also write report.xlsx (needs openpyxl)"
        )

    def artifacts(self, config):
        found = []
        for pattern in REPORT_ARTIFACTS:
            found.extend(sorted(config.out_dir.glob(pattern)))
        return found

    @stage_monitor("report")
    def handle(self, config, options):
        paths = self.artifacts(config)
        if not paths:
            raise ConfigurationError(f"No artifacts to report in {config.out_dir}")

        tables = {}
        long_rows = []
        for path in paths:
            table = read_text_table(self.read(path))
            tables[path.stem] = table
            for row_number, row in enumerate(table.itertuples(index=False), 1):
                for column, value in zip(table.columns, row):
                    long_rows.append((path.name, row_number, column, value))
        report = pd.DataFrame(long_rows, columns=REPORT_COLUMNS)
        self.write_csv(report, config.output_path("report.csv"))
        self.results = {"artifacts": [path.name for path in paths]}

        if options.xlsx:
            workbook = config.output_path("report.xlsx")
            # workbook bytes embed a timestamp, so the file stays out of the hashed outputs
            self.exporter.export_xlsx(
                tables, workbook, titles={name: name.replace("_", " ") for name in tables}
            )
            self.results["xlsx"] = str(workbook)
