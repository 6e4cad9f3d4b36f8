"""
Tests for modularity and threshold sweeps on planted commuting structures.
"""

from monopsono.common_conf.settings import override_settings
from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.common_tests.utils import disconnected_flows, planted_flows
from monopsono.core.exceptions import DomainError
from monopsono.delineation import Partition, cross_zone_share, modularity, sweep_thresholds


class ModularityTests(MonopsonoTestCase):
    """Test modularity values on known partitions."""

    def test_disconnected_blocks_score_one_minus_inverse_block_count(self):
        for blocks in (2, 3, 4):
            fm, truth = disconnected_flows(blocks, 3)
            with self.subTest(blocks=blocks):
                self.assertLess(abs(modularity(fm, truth) - (1 - 1 / blocks)), 1e-12)

    def test_single_zone_scores_exactly_zero(self):
        fm, _ = planted_flows(3, 4)
        everything = Partition({region: 0 for region in fm.regions})
        self.assertEqual(modularity(fm, everything), 0.0)

    def test_planted_partition_beats_singletons(self):
        fm, truth = planted_flows(3, 3, inside=100.0, outside=1.0, stay=10.0)
        self.assertGreater(
            modularity(fm, truth), modularity(fm, Partition.singletons(fm.regions))
        )

    def test_cross_zone_share(self):
        fm, truth = disconnected_flows(2, 3)
        self.assertEqual(cross_zone_share(fm, truth), 0.0)
        singletons = Partition.singletons(fm.regions)
        self.assertEqual(cross_zone_share(fm, singletons), 1.0)


class SweepTests(MonopsonoTestCase):
    """Test threshold sweeps."""

    def test_recovers_planted_blocks(self):
        for blocks in (2, 3, 4):
            fm, truth = planted_flows(blocks, 3, inside=100.0, outside=1.0, stay=10.0)
            with self.subTest(blocks=blocks):
                result = sweep_thresholds(fm)
                self.assertEqual(result.partition.assignment, truth.assignment)
                self.assertLess(abs(result.q_star - modularity(fm, truth)), 1e-12)

    def test_recovers_disconnected_blocks_exactly(self):
        for blocks in (2, 3, 4):
            fm, truth = disconnected_flows(blocks, 3)
            with self.subTest(blocks=blocks):
                result = sweep_thresholds(fm)
                self.assertEqual(result.partition.assignment, truth.assignment)
                self.assertLess(abs(result.q_star - (1 - 1 / blocks)), 1e-12)

    def test_ties_go_to_the_largest_threshold(self):
        fm, _ = disconnected_flows(2, 3)
        result = sweep_thresholds(fm, grid=[0.05, 0.1, 0.2])
        self.assertEqual(result.tau_star, 0.2)

    def test_reports_baseline_and_evaluations(self):
        fm, _ = planted_flows(2, 3, inside=100.0, outside=1.0, stay=10.0)
        result = sweep_thresholds(fm, grid=[0.3, 0.1, 0.2])
        self.assertEqual(list(result.evaluations["tau"]), [0.1, 0.2, 0.3])
        self.assertEqual(
            result.initial_q, modularity(fm, Partition.singletons(fm.regions))
        )
        self.assertEqual(result.initial_cross_zone_share, 1.0)

    def test_parallel_sweep_matches_serial(self):
        fm, _ = planted_flows(3, 3, inside=100.0, outside=1.0, stay=10.0)
        serial = sweep_thresholds(fm, n_jobs=1)
        with override_settings(THREADS=2):
            threaded = sweep_thresholds(fm)
        self.assertEqual(serial.tau_star, threaded.tau_star)
        self.assertTrue(serial.evaluations.equals(threaded.evaluations))

    def test_empty_grid(self):
        fm, _ = planted_flows(2, 2)
        with self.assertRaises(DomainError):
            sweep_thresholds(fm, grid=[])
