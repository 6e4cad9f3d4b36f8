"""
Generate a synthetic panel with planted concentration effects.

Usage:
    monopsono synth --out run --seed 7 --markets 200 --years 10
"""

from monopsono.decorators.performance import stage_monitor
from monopsono.oligopsony_sim.synth import SynthConfig, synth_panel

from ..base import BaseCommand


class Command(BaseCommand):
    name = "synth"
    help = "Write synthetic snapshots and companion input files from an oligopsony model."

    def add_arguments(self, parser):
        parser.add_argument("--markets", type=int, help="Approximate number of markets")
        parser.add_argument("--years", type=int, help="Number of years")
        parser.add_argument(
            "--minwage",
            action="store_true",
            default=None,
            help="Add a staggered minimum-wage schedule",
        )

    def synth_config(self, config, options) -> SynthConfig:
        values = dict(config.synth)
        if options.markets is not None:
            values["markets"] = options.markets
        if options.years is not None:
            values["n_years"] = options.years
        if options.minwage:
            values["minwage"] = True
        return SynthConfig.from_mapping(values, seed=config.seed)

    def parameters(self, config, options):
        return {**config.parameters(), "synth": self.synth_config(config, options).__dict__}

    @stage_monitor("synth")
    def handle(self, config, options):
        panel = synth_panel(self.synth_config(config, options), n_jobs=config.threads)
        for filename, table in panel.tables().items():
            self.write_csv(table, config.output_path(filename))
        self.results = {
            "snapshots": len(panel.snapshots),
            "establishment_years": len(panel.markets),
        }
