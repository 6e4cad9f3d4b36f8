"""
Tests for outward mobility of job switchers.
"""

import numpy as np
import pandas as pd

from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.common_tests.factories import SnapshotRecordFactory
from monopsono.common_tests.utils import snapshot_frame
from monopsono.data_model import mobility_terciles, outward_mobility


class OutwardMobilityTests(MonopsonoTestCase):
    """Test switcher attribution and mobility shares."""

    def setUp(self):
        super().setUp()
        self.records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", year=2010),
                SnapshotRecordFactory(worker_id="W1", estab_id="E2", year=2011),
                SnapshotRecordFactory(worker_id="W2", estab_id="E1", year=2010),
                SnapshotRecordFactory(worker_id="W2", estab_id="E3", industry="54321", year=2011),
                SnapshotRecordFactory(worker_id="W3", estab_id="E1", year=2010),
                SnapshotRecordFactory(worker_id="W3", estab_id="E1", year=2011),
            ]
        )

    def test_share_of_switchers_leaving_the_market(self):
        mobility = outward_mobility(self.records)
        self.assertEqual(len(mobility), 1)
        row = mobility.iloc[0]
        self.assertEqual((row["industry"], row["zone"], row["year"]), ("1234", "05111", 2010))
        self.assertEqual((row["stayers"], row["movers"]), (1, 1))
        self.assertEqual(row["mobility"], 0.5)

    def test_zone_change_counts_as_move(self):
        records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", region="01001", year=2010),
                SnapshotRecordFactory(worker_id="W1", estab_id="E2", region="01002", year=2011),
            ]
        )
        self.assertEqual(outward_mobility(records)["mobility"].iloc[0], 1.0)
        pooled = outward_mobility(records, {"01001": "cz0", "01002": "cz0"})
        self.assertEqual(pooled["mobility"].iloc[0], 0.0)

    def test_no_switchers_no_rows(self):
        records = snapshot_frame(
            [
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", year=2010),
                SnapshotRecordFactory(worker_id="W1", estab_id="E1", year=2011),
            ]
        )
        self.assertTrue(outward_mobility(records).empty)


class MobilityTercileTests(MonopsonoTestCase):
    """Test establishment mobility groups."""

    def test_terciles_within_sector(self):
        mobility = pd.DataFrame(
            {
                "industry": ["1", "2", "3"],
                "zone": ["z", "z", "z"],
                "year": [2010, 2010, 2010],
                "mobility": [0.1, 0.5, 0.9],
            }
        )
        estabs = pd.DataFrame(
            {
                "estab_id": ["E1", "E2", "E3", "E4"],
                "market": ["3|z", "1|z", "2|z", "4|z"],
                "sector": ["S", "S", "S", "S"],
            }
        )
        groups = mobility_terciles(estabs, mobility)
        self.assertEqual(list(groups[:3]), ["high", "low", "medium"])
        self.assertTrue(pd.isna(groups.iloc[3]))
        self.assertEqual(groups.name, "mobility_group")
