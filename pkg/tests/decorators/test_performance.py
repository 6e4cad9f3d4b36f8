"""
Tests for performance decorators.
"""

from unittest.mock import Mock, patch

from monopsono.common_conf.settings import override_settings
from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.decorators.performance import stage_monitor


@patch("monopsono.decorators.performance.psutil", None)
class StageMonitorTests(MonopsonoTestCase):
    """Tests for stage_monitor decorator."""

    @patch("monopsono.decorators.performance.Categories")
    @patch("monopsono.decorators.performance.time")
    def test_fast_stage(self, mock_time, mock_categories):
        """Test fast stages are logged at info level."""
        mock_logger = Mock()
        mock_categories.get_logger.return_value = mock_logger
        mock_time.perf_counter.side_effect = [1000.0, 1000.5]

        @stage_monitor(threshold=1.0)
        def delineate():
            return "ok"

        self.assertEqual(delineate(), "ok")
        mock_categories.get_logger.assert_called_with(
            "performance.delineate", mock_categories.PERFORMANCE
        )
        mock_logger.info.assert_called_with("Stage timing: delineate - 0.5000s")
        mock_logger.warning.assert_not_called()

    @patch("monopsono.decorators.performance.Categories")
    @patch("monopsono.decorators.performance.time")
    def test_slow_stage_uses_setting(self, mock_time, mock_categories):
        """Test stages above SLOW_STAGE_THRESHOLD log a warning."""
        mock_logger = Mock()
        mock_categories.get_logger.return_value = mock_logger
        mock_time.perf_counter.side_effect = [1000.0, 1003.0]

        @stage_monitor(stage="bounds")
        def run():
            return None

        with override_settings(SLOW_STAGE_THRESHOLD=2.0):
            run()
        mock_logger.warning.assert_called_with("Slow stage: bounds - 3.0000s")

    @patch("monopsono.decorators.performance.Categories")
    @patch("monopsono.decorators.performance.time")
    def test_failed_stage(self, mock_time, mock_categories):
        """Test failures log the elapsed time and re-raise."""
        mock_logger = Mock()
        mock_categories.get_logger.return_value = mock_logger
        mock_time.perf_counter.side_effect = [1000.0, 1000.25]

        @stage_monitor()
        def regress():
            raise ValueError("singular")

        with self.assertRaises(ValueError):
            regress()
        mock_logger.error.assert_called_with("Stage failed: regress - 0.2500s: singular")
