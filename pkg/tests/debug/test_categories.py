"""
Tests for logging categories and handler configuration.
"""

import io
import json
import logging

from monopsono.common_conf.settings import override_settings
from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.debug import Categories, configure_logging
from monopsono.debug.core.categories import ROOT_LOGGER, build_formatter, resolve_level


class CategoriesTests(MonopsonoTestCase):
    """Tests for Categories.get_logger."""

    def test_logger_name_and_enabled_state(self):
        logger = Categories.get_logger("mod", Categories.DATA)
        self.assertEqual(logger.name, "monopsono.data.mod")
        self.assertFalse(logger.disabled)

    def test_disabled_category(self):
        with override_settings(ENABLED_LOG_CATEGORIES=["data"]):
            logger = Categories.get_logger("mod", Categories.ESTIMATION)
        self.assertTrue(logger.disabled)
        Categories.get_logger("mod", Categories.ESTIMATION)
        self.assertFalse(logger.disabled)

    def test_unknown_category(self):
        with self.assertRaises(ValueError):
            Categories.get_logger("mod", "api")


class ConfigureLoggingTests(MonopsonoTestCase):
    """Tests for configure_logging."""

    def setUp(self):
        super().setUp()
        root = logging.getLogger(ROOT_LOGGER)
        state = (list(root.handlers), root.level, root.propagate)

        def restore():
            root.handlers[:] = state[0]
            root.setLevel(state[1])
            root.propagate = state[2]

        self.addCleanup(restore)

    def test_levels(self):
        self.assertEqual(resolve_level("DEBUG"), logging.DEBUG)
        self.assertEqual(resolve_level(" warning "), logging.WARNING)
        with self.assertRaises(ValueError):
            resolve_level("verbose")

    def test_single_handler_after_repeated_calls(self):
        stream = io.StringIO()
        configure_logging("info", stream, "text")
        root = configure_logging("debug", stream, "text")
        tagged = [h for h in root.handlers if getattr(h, "_monopsono", False)]
        self.assertEqual(len(tagged), 1)
        self.assertEqual(root.level, logging.DEBUG)

        Categories.get_logger("mod", Categories.PIPELINE).debug("hello")
        self.assertIn("DEBUG monopsono.pipeline.mod hello", stream.getvalue())

    def test_level_from_settings(self):
        with override_settings(LOG="error"):
            root = configure_logging(stream=io.StringIO())
        self.assertEqual(root.level, logging.ERROR)

    def test_json_lines_nest_structured_messages(self):
        stream = io.StringIO()
        with override_settings(LOG_FORMAT="json"):
            configure_logging("info", stream)
        logger = Categories.get_logger("mod", Categories.PIPELINE)
        logger.info('{"event": "stage", "stage": "ingest"}')
        logger.info("plain")

        first, second = [json.loads(line) for line in stream.getvalue().splitlines()]
        self.assertEqual(first["level"], "info")
        self.assertEqual(first["logger"], "monopsono.pipeline.mod")
        self.assertEqual(first["record"], {"event": "stage", "stage": "ingest"})
        self.assertEqual(second["record"], "plain")

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            build_formatter("xml")
