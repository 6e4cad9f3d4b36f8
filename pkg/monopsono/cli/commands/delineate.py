"""
Delineate commuting zones from a district commuting matrix.
"""

from monopsono.data_model import parse_flow_file
from monopsono.decorators.performance import stage_monitor
from monopsono.delineation import FlowMatrix, sweep_thresholds

from ..artifacts import DELINEATION_FILE
from ..base import BaseCommand


class Command(BaseCommand):
    name = "delineate"
    help = "Pick the dominant-flow threshold with maximal modularity and write delineation.csv."

    @stage_monitor("delineate")
    def handle(self, config, options):
        flows = parse_flow_file(self.read(config.input_path("flows")))
        result = sweep_thresholds(FlowMatrix.from_long(flows), n_jobs=config.threads)
        self.write_csv(result.partition.to_frame(), config.output_path(DELINEATION_FILE))
        self.write_csv(result.evaluations, config.output_path("delineation_sweep.csv"))
        self.results = {
            "tau_star": result.tau_star,
            "zones": result.partition.zone_count,
            "modularity": result.q_star,
            "cross_zone_share": result.cross_zone_share,
            "initial_modularity": result.initial_q,
            "initial_cross_zone_share": result.initial_cross_zone_share,
        }
