"""
Tests for main-job selection and market share panels.
"""

import numpy as np
import pandas as pd

from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.common_tests.factories import (
    ApprenticeSnapshotFactory,
    SnapshotRecordFactory,
    snapshot_records,
)
from monopsono.common_tests.utils import snapshot_frame
from monopsono.core.enums import ObjectKind
from monopsono.core.exceptions import DomainError
from monopsono.data_model import build_market_panel, select_main_jobs, truncate_industry
from monopsono.data_model.markets import map_zones


class MainJobTests(MonopsonoTestCase):
    """Test the one-main-job-per-worker-year rule."""

    def test_highest_wage_wins(self):
        records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", daily_wage=50.0),
                SnapshotRecordFactory(worker_id="W1", estab_id="E2", daily_wage=80.0),
            ]
        )
        flagged = select_main_jobs(records)
        self.assertEqual(list(flagged["main_job"]), [False, True])

    def test_ties_go_to_smallest_establishment(self):
        records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", estab_id="E9"),
                SnapshotRecordFactory(worker_id="W1", estab_id="E2"),
            ]
        )
        self.assertEqual(list(select_main_jobs(records)["main_job"]), [False, True])

    def test_missing_wage_ranks_lowest(self):
        records = snapshot_frame(
            [
                ApprenticeSnapshotFactory(worker_id="W1", estab_id="E1"),
                SnapshotRecordFactory(worker_id="W1", estab_id="E2", daily_wage=1.0),
            ]
        )
        self.assertEqual(list(select_main_jobs(records)["main_job"]), [False, True])

    def test_one_main_job_per_year(self):
        records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", year=2010),
                SnapshotRecordFactory(worker_id="W1", year=2011),
            ]
        )
        self.assertTrue(select_main_jobs(records)["main_job"].all())


class ZoneAndIndustryTests(MonopsonoTestCase):
    """Test industry truncation and zone mapping."""

    def test_truncate(self):
        codes = pd.Series(["12345", "67890"])
        self.assertEqual(list(truncate_industry(codes, 3)), ["123", "678"])
        with self.assertRaises(DomainError):
            truncate_industry(codes, 2)

    def test_map_zones(self):
        regions = pd.Series(["A", "B"])
        self.assertEqual(list(map_zones(regions, None)), ["A", "B"])
        self.assertEqual(list(map_zones(regions, {"A": "z1", "B": "z1"})), ["z1", "z1"])
        with self.assertRaises(DomainError):
            map_zones(regions, {"A": "z1"})


class MarketPanelTests(MonopsonoTestCase):
    """Test share panels."""

    def test_employment_shares(self):
        records = snapshot_frame(snapshot_records({"E1": 3, "E2": 1}))
        panel = build_market_panel(records, None, industry_digits=4)
        self.assertEqual(len(panel.cells), 1)
        self.assertEqual(panel.cells["j"].iloc[0], 2)
        self.assertEqual(panel.cells["industry"].iloc[0], "1234")
        self.assertArrayClose(panel.shares["share"], [0.75, 0.25])
        self.assertEqual(panel.delineation, {"05111": "05111"})

    def test_apprentices_and_secondary_jobs_do_not_count(self):
        records = snapshot_frame(
            snapshot_records({"E1": 2})
            + [
                ApprenticeSnapshotFactory(estab_id="E2"),
                SnapshotRecordFactory(worker_id="W-main", estab_id="E1", daily_wage=90.0),
                SnapshotRecordFactory(worker_id="W-main", estab_id="E3", daily_wage=20.0),
            ]
        )
        panel = build_market_panel(records, None)
        self.assertEqual(list(panel.shares["estab_id"]), ["E1"])
        self.assertEqual(panel.shares["count"].iloc[0], 3)

    def test_delineation_pools_districts(self):
        records = snapshot_frame(
            snapshot_records({"E1": 1}, region="01001") + snapshot_records({"E2": 1}, region="01002")
        )
        panel = build_market_panel(records, {"01001": "cz0", "01002": "cz0"})
        self.assertEqual(panel.zone_count, 1)
        self.assertEqual(panel.cells["j"].iloc[0], 2)

    def test_share_vectors_sum_to_one(self):
        rng = np.random.default_rng(0)
        sizes = {f"E{i}": int(rng.integers(1, 9)) for i in range(12)}
        records = snapshot_frame(snapshot_records(sizes))
        panel = build_market_panel(records, None)
        for key, shares in panel.share_vectors():
            with self.subTest(key=key):
                self.assertAlmostEqual(shares.sum(), 1.0, places=12)

    def test_coarse_markets_sum_their_sub_markets(self):
        rng = np.random.default_rng(3)
        records = []
        for n, industry in enumerate(["12341", "12342", "12345", "12350", "99901"]):
            for year in (2010, 2011):
                sizes = {f"E{n}{f}": int(rng.integers(1, 9)) for f in range(int(rng.integers(1, 5)))}
                records += snapshot_records(sizes, industry=industry, year=year)
        frame = snapshot_frame(records)
        fine = build_market_panel(frame, None, industry_digits=5).cells
        coarse = build_market_panel(frame, None, industry_digits=4).cells
        keys = ["industry", "zone", "year"]
        summed = (
            fine.assign(industry=fine["industry"].str[:4])
            .groupby(keys, sort=True)[["total", "j"]]
            .sum()
            .reset_index()
        )
        expected = coarse.sort_values(keys).reset_index(drop=True)
        self.assertEqual(list(summed["industry"]), list(expected["industry"]))
        self.assertArrayClose(summed["total"], expected["total"])
        self.assertArrayClose(summed["j"], expected["j"])


class HiresPanelTests(MonopsonoTestCase):
    """Test hires-based share panels."""

    def setUp(self):
        super().setUp()
        self.records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", year=2010),
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", year=2011),
                SnapshotRecordFactory(worker_id="W2", estab_id="E2", year=2011),
                SnapshotRecordFactory(worker_id="W3", estab_id="E1", year=2010),
                SnapshotRecordFactory(worker_id="W3", estab_id="E2", year=2011),
                SnapshotRecordFactory(worker_id="W4", estab_id="E1", year=2011),
            ]
        )

    def test_first_year_is_omitted(self):
        panel = build_market_panel(self.records, None, object_kind="hires")
        self.assertIs(panel.object_kind, ObjectKind.HIRES)
        self.assertEqual(panel.omitted_years, [2010])
        self.assertEqual(list(panel.cells["year"]), [2011])

    def test_hires_exclude_incumbents(self):
        panel = build_market_panel(self.records, None, object_kind=ObjectKind.HIRES)
        counts = dict(zip(panel.shares["estab_id"], panel.shares["count"]))
        self.assertEqual(counts, {"E1": 1, "E2": 2})
        self.assertArrayClose(panel.shares["share"], [1 / 3, 2 / 3])
