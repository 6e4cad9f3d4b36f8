"""
Base test case classes for monopsono tests.
"""

import shutil
import tempfile
import unittest
from pathlib import Path

import numpy as np

from monopsono.common_conf.settings import reset_overrides


class MonopsonoTestCase(unittest.TestCase):
    """Base test case: clears runtime setting overrides after each test."""

    def setUp(self):
        super().setUp()
        self.addCleanup(reset_overrides)

    def assertArrayClose(self, actual, expected, atol=1e-12, rtol=0.0, msg=None):
        np.testing.assert_allclose(
            np.asarray(actual, dtype=float),
            np.asarray(expected, dtype=float),
            atol=atol,
            rtol=rtol,
            err_msg=msg or "",
        )


class FileTestCase(MonopsonoTestCase):
    """Base test case with a temporary working directory in ``self.tmp``."""

    def setUp(self):
        super().setUp()
        self.tmp = Path(tempfile.mkdtemp(prefix="monopsono-test-"))
        self.addCleanup(shutil.rmtree, self.tmp, ignore_errors=True)
