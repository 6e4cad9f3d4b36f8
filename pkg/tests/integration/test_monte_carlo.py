"""
Monte Carlo checks of the concentration IV pipeline and of the Conley bounds.
"""

import numpy as np
import pandas as pd
import pytest

from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.data_model import build_estab_panel, build_market_panel
from monopsono.econometrics import RegressionFrame, conley_bounds, estimate
from monopsono.minwage_analysis import assemble_spec, get_preset, leave_one_out_instrument
from monopsono.oligopsony_sim.synth import SynthConfig, synth_panel

THETA = -0.05


def iv_replication(seed, markets=2000, years=10):
    """Synthesize a panel, ingest it and estimate the IV concentration spec."""
    panel = synth_panel(SynthConfig.for_markets(markets, years, seed=seed, theta=THETA))
    delineation = dict(zip(panel.delineation["district"], panel.delineation["zone"]))
    market_panel = build_market_panel(panel.snapshots, delineation)
    estab_panel = build_estab_panel(panel.snapshots, panel.sectors, panel.minwage, market_panel)
    instrument = leave_one_out_instrument(market_panel)
    fit = estimate(assemble_spec(estab_panel, get_preset("eq2_iv"), instrument))
    return fit.coef("log_hhi"), fit.std_error("log_hhi"), fit.first_stage_f


def plausibly_exogenous_frame(rng, phi, clusters=50, size=10):
    n = clusters * size
    cluster = np.repeat(np.arange(clusters), size)
    z = rng.standard_normal(n)
    v = rng.standard_normal(n)
    x = 0.5 * z + v
    u = 0.5 * v + rng.standard_normal(n) + 0.3 * rng.standard_normal(clusters)[cluster]
    y = THETA * x + phi * z + u
    data = pd.DataFrame({"y": y, "x": x, "z": z, "cluster": cluster})
    return RegressionFrame(data=data, y="y", endog=["x"], instruments=["z"], cluster="cluster")


@pytest.mark.slow
class IvRecoveryTests(MonopsonoTestCase):
    """Test the planted wage elasticity is recovered across seeded replications."""

    def test_theta_within_three_standard_errors(self):
        covered = 0
        for seed in range(100):
            coefficient, se, first_stage_f = iv_replication(seed)
            self.assertGreater(first_stage_f, 10.0, f"seed {seed}")
            covered += abs(coefficient - THETA) <= 3 * se
        self.assertGreaterEqual(covered, 95)


@pytest.mark.slow
class ConleyCoverageTests(MonopsonoTestCase):
    """Test the bounds cover the true coefficient when phi lies in the range."""

    def test_coverage(self):
        rng = np.random.default_rng(404)
        covered = 0
        for _ in range(200):
            phi = rng.uniform(0.0, 0.1)
            bounds = conley_bounds(
                plausibly_exogenous_frame(rng, phi), phi_min=0.0, phi_max=0.1, grid_points=11
            )
            covered += bounds.theta_lo <= THETA <= bounds.theta_hi
        self.assertGreaterEqual(covered, 180)
