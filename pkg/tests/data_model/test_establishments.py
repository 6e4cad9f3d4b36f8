"""
Tests for the establishment by year panel.
"""

import math

import numpy as np
import pandas as pd

from monopsono.common_conf.settings import override_settings
from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.common_tests.factories import (
    ApprenticeSnapshotFactory,
    MarginalSnapshotFactory,
    SnapshotRecordFactory,
)
from monopsono.common_tests.utils import snapshot_frame
from monopsono.core.enums import Territory
from monopsono.core.exceptions import DomainError
from monopsono.data_model import (
    build_estab_panel,
    build_market_panel,
    hourly_wage,
    kaitz_index,
    kaitz_quintile,
    territory_of,
)
from monopsono.data_model.records import ESTAB_PANEL_COLUMNS


def schedule(rows):
    frame = pd.DataFrame(rows, columns=["sector", "territory", "valid_from", "valid_to", "hourly_wage"])
    frame["valid_from"] = pd.to_datetime(frame["valid_from"])
    frame["valid_to"] = pd.to_datetime(frame["valid_to"])
    return frame


def scenario_records():
    rows = []
    for year in (2010, 2011, 2012):
        for n, wage in enumerate((70.0, 84.0, 98.0)):
            rows.append(SnapshotRecordFactory(worker_id=f"A{n}", estab_id="E1", year=year, daily_wage=wage))
    for year in (2010, 2011):
        rows.append(SnapshotRecordFactory(worker_id="B0", estab_id="E2", year=year, daily_wage=80.0))
        rows.append(SnapshotRecordFactory(worker_id="B1", estab_id="E2", year=year, contract="regular_pt", daily_wage=40.0))
        rows.append(MarginalSnapshotFactory(worker_id="B2", estab_id="E2", year=year))
        rows.append(ApprenticeSnapshotFactory(worker_id="B3", estab_id="E2", year=year))
    rows.append(SnapshotRecordFactory(worker_id="C0", estab_id="E3", industry="99999", year=2010))
    return snapshot_frame(rows)


class ConversionTests(MonopsonoTestCase):
    """Test wage conversions, territories and Kaitz groups."""

    def test_hourly_wage(self):
        self.assertEqual(hourly_wage(280.0), 49.0)
        with override_settings(HOURS_PER_WEEK=35):
            self.assertEqual(hourly_wage(70.0), 14.0)

    def test_kaitz_index(self):
        self.assertAlmostEqual(kaitz_index(7.35, 84.0), 0.5, places=12)
        with self.assertRaises(DomainError):
            kaitz_index(0.0, 84.0)

    def test_kaitz_quintiles(self):
        groups = kaitz_quintile(np.array([0.5, 0.68, 0.8, 1.0, 1.2]))
        self.assertEqual(list(groups), [1, 2, 3, 4, 5])

    def test_territories(self):
        self.assertIs(territory_of("11000"), Territory.BERLIN)
        self.assertIs(territory_of("12345"), Territory.EAST)
        self.assertIs(territory_of("16001"), Territory.EAST)
        self.assertIs(territory_of("05111"), Territory.WEST)
        with self.assertRaises(DomainError):
            territory_of("X1")


class EstabPanelTests(MonopsonoTestCase):
    """Test the establishment panel on a small hand-checked scenario."""

    def setUp(self):
        super().setUp()
        records = scenario_records()
        self.market_panel = build_market_panel(records, None, industry_digits=4)
        self.panel = build_estab_panel(
            records,
            pd.DataFrame({"industry_prefix": ["1234"], "sector": ["S1"]}),
            schedule([["S1", "west", "2011-01-01", None, 7.35]]),
            self.market_panel,
        )
        self.frame = self.panel.frame.set_index(["estab_id", "year"])

    def test_columns_and_skips(self):
        self.assertEqual(list(self.panel.frame.columns), ESTAB_PANEL_COLUMNS)
        self.assertEqual(len(self.panel), 5)
        self.assertEqual(self.panel.skip_report["unmapped_sector_estabs"], 1)

    def test_wage_moments_and_counts(self):
        row = self.frame.loc[("E1", 2010)]
        self.assertEqual(row["mean_wage"], 84.0)
        self.assertEqual(row["p50_wage"], 84.0)
        self.assertEqual(row["emp_ft"], 3)
        e2 = self.frame.loc[("E2", 2010)]
        self.assertEqual((e2["emp_ft"], e2["emp_pt"], e2["emp_marginal"]), (1, 1, 1))
        self.assertEqual(e2["emp_overall"], 3)
        self.assertEqual(e2["mean_wage"], 80.0)

    def test_closure_only_before_the_last_data_year(self):
        self.assertTrue(self.frame.loc[("E2", 2011), "closure"])
        self.assertFalse(self.frame.loc[("E2", 2010), "closure"])
        self.assertFalse(self.frame.loc[("E1", 2012), "closure"])

    def test_minimum_wage_and_kaitz(self):
        self.assertTrue(np.isnan(self.frame.loc[("E1", 2010), "minwage"]))
        self.assertEqual(self.frame.loc[("E1", 2011), "minwage"], 7.35)
        self.assertAlmostEqual(self.frame.loc[("E1", 2011), "kaitz"], 0.5, places=12)
        self.assertEqual(self.frame.loc[("E1", 2010), "first_regulated_year"], 2011)
        self.assertEqual(self.frame.loc[("E1", 2010), "territory"], "west")

    def test_implicit_minimum_wage_in_the_year_before(self):
        expected = np.percentile(hourly_wage(np.array([70.0, 84.0, 98.0, 80.0])), 5)
        self.assertAlmostEqual(self.frame.loc[("E1", 2010), "implicit_minwage"], expected, places=12)
        self.assertTrue(np.isnan(self.frame.loc[("E1", 2011), "implicit_minwage"]))

    def test_concentration_columns(self):
        self.assertAlmostEqual(self.frame.loc[("E1", 2010), "hhi_current"], 0.5, places=12)
        self.assertAlmostEqual(self.frame.loc[("E1", 2012), "hhi_current"], 1.0, places=12)
        self.assertAlmostEqual(self.frame.loc[("E1", 2012), "hhi_avg"], 2 / 3, places=12)
        self.assertAlmostEqual(self.frame.loc[("E1", 2012), "hhi_predetermined"], 0.5, places=12)
        self.assertEqual(self.frame.loc[("E1", 2010), "market"], "1234|05111")

    def test_computed_sector_employment(self):
        self.assertAlmostEqual(self.frame.loc[("E1", 2010), "log_employment"], math.log(6), places=12)
        self.assertTrue(np.isnan(self.frame.loc[("E1", 2010), "cba_share"]))

    def test_supplied_controls(self):
        records = scenario_records()
        controls = pd.DataFrame(
            {
                "kind": ["sector", "estab"],
                "sector": ["S1", ""],
                "territory": ["west", ""],
                "year": [2010.0, np.nan],
                "log_employment": [np.nan, np.nan],
                "cba_share": [0.4, np.nan],
                "estab_id": ["", "E1"],
                "akm_premium": [np.nan, 0.12],
            }
        )
        panel = build_estab_panel(
            records,
            pd.DataFrame({"industry_prefix": ["1234"], "sector": ["S1"]}),
            schedule([]),
            self.market_panel,
            controls,
        ).frame.set_index(["estab_id", "year"])
        self.assertEqual(panel.loc[("E1", 2010), "cba_share"], 0.4)
        self.assertAlmostEqual(panel.loc[("E1", 2010), "log_employment"], math.log(6), places=12)
        self.assertEqual(panel.loc[("E1", 2011), "akm_premium"], 0.12)
        self.assertTrue(np.isnan(panel.loc[("E2", 2011), "akm_premium"]))

    def test_berlin_falls_back_to_the_default_territory(self):
        records = snapshot_frame(
            [SnapshotRecordFactory(worker_id="W1", estab_id="E1", region="11000", year=2010)]
        )
        sectors = pd.DataFrame({"industry_prefix": ["1234"], "sector": ["S1"]})
        market = build_market_panel(records, None)
        west = build_estab_panel(records, sectors, schedule([]), market).frame
        self.assertEqual(west["territory"].iloc[0], "west")
        berlin = build_estab_panel(
            records, sectors, schedule([["S1", "berlin", "2009-01-01", None, 8.0]]), market
        ).frame
        self.assertEqual(berlin["territory"].iloc[0], "berlin")
        self.assertEqual(berlin["minwage"].iloc[0], 8.0)
        with override_settings(BERLIN_SECTOR_TERRITORY={"S1": "east"}):
            east = build_estab_panel(records, sectors, schedule([]), market).frame
        self.assertEqual(east["territory"].iloc[0], "east")
