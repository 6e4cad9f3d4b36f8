"""
Tests for StructuredLogger.
"""

import json
import math
from unittest.mock import Mock, patch

import numpy as np

from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.core.enums import Design
from monopsono.debug.logger import StructuredLogger


class StructuredLoggerTests(MonopsonoTestCase):
    """Tests for StructuredLogger records."""

    def setUp(self):
        super().setUp()
        patcher = patch("monopsono.debug.logger.Categories")
        mock_categories = patcher.start()
        self.addCleanup(patcher.stop)
        self.mock_logger = Mock()
        mock_categories.get_logger.return_value = self.mock_logger
        self.logger = StructuredLogger("run")

    def last_record(self, method):
        return json.loads(getattr(self.mock_logger, method).call_args[0][0])

    def test_stage_record(self):
        self.logger.log_stage("regress", "started", {"spec": "baseline"})
        self.assertEqual(
            self.last_record("info"),
            {"event": "stage", "stage": "regress", "status": "started", "spec": "baseline"},
        )

    def test_values_are_made_json_safe(self):
        self.logger.log_manifest(
            {"design": Design.MINWAGE_EQ4, "beta": np.array([1.0, 2.0]), "se": math.nan}
        )
        record = self.last_record("info")
        self.assertEqual(record["design"], "minwage_eq4")
        self.assertEqual(record["beta"], [1.0, 2.0])
        self.assertIsNone(record["se"])

    def test_error_record(self):
        self.logger.log_error(ValueError("bad"), {"row": 3})
        self.assertEqual(
            self.last_record("error"),
            {"event": "error", "type": "ValueError", "message": "bad", "context": {"row": 3}},
        )

    def test_performance_rounds_duration(self):
        self.logger.log_performance("sweep", 1.23456789)
        self.assertEqual(self.last_record("info")["duration"], 1.234568)

    def test_empty_skip_report_is_silent(self):
        self.logger.log_skip_report("ingest", {})
        self.mock_logger.info.assert_not_called()
        self.logger.log_skip_report("ingest", {"unmapped_sector_rows": 2})
        self.assertEqual(self.last_record("info")["skipped"], {"unmapped_sector_rows": 2})
