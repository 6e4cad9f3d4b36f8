"""
Cross-checks of OLS, 2SLS and the cluster sandwich against linearmodels.
"""

import numpy as np
import pandas as pd
import pytest

from monopsono.common_conf.settings import override_settings
from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.econometrics import RegressionFrame, estimate, prepare

iv = pytest.importorskip("linearmodels.iv")


def panel_data(seed, n=400, clusters=25, groups=40):
    rng = np.random.default_rng(seed)
    cluster = np.arange(n) % clusters
    group = rng.integers(0, groups, size=n)
    z = rng.normal(size=n) + 0.3 * rng.normal(size=groups)[group]
    u = rng.normal(size=n) + 0.5 * rng.normal(size=clusters)[cluster]
    w = rng.normal(size=n)
    x = 0.7 * z + 0.4 * u + rng.normal(scale=0.5, size=n)
    y = 0.3 * rng.normal(size=groups)[group] - 0.5 * x + 0.2 * w + u
    return pd.DataFrame({"y": y, "x": x, "z": z, "w": w, "cluster": cluster, "group": group})


def reference_fit(d, clusters, debiased):
    """linearmodels on the same demeaned design."""
    exog = d.X if d.X.shape[1] else None
    endog = d.W if d.W.shape[1] else None
    instruments = d.Z if d.Z.shape[1] else None
    model = iv.IV2SLS(d.y, exog, endog, instruments)
    return model.fit(cov_type="clustered", clusters=clusters, debiased=debiased)


class ReferenceFitTests(MonopsonoTestCase):
    """Test estimates and clustered covariances against IV2SLS."""

    def check(self, frame):
        d = prepare(frame)
        for correction, debiased in (("CR1", True), ("CR0", False)):
            with self.subTest(correction=correction):
                with override_settings(CLUSTER_CORRECTION=correction):
                    fit = estimate(frame)
                reference = reference_fit(d, d.clusters, debiased)
                scale = np.abs(reference.cov.to_numpy()).max()
                self.assertArrayClose(fit.beta, reference.params.to_numpy(), atol=1e-10)
                self.assertArrayClose(
                    fit.vcov / scale, reference.cov.to_numpy() / scale, atol=1e-8
                )

    def test_ols_with_intercept(self):
        frame = RegressionFrame(
            data=panel_data(1), y="y", exog=["x", "w"], cluster="cluster"
        )
        self.check(frame)

    def test_ols_after_absorbing_fixed_effects(self):
        frame = RegressionFrame(
            data=panel_data(2), y="y", exog=["x", "w"], fe=["group"], cluster="cluster"
        )
        self.check(frame)

    def test_tsls_after_absorbing_fixed_effects(self):
        frame = RegressionFrame(
            data=panel_data(3),
            y="y",
            exog=["w"],
            endog=["x"],
            instruments=["z"],
            fe=["group"],
            cluster="cluster",
        )
        self.check(frame)
