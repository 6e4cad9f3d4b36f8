"""
pytest fixtures shared by monopsono tests.
"""

import numpy as np
import pytest

from monopsono.common_conf.settings import reset_overrides


@pytest.fixture(autouse=True)
def _reset_settings():
    yield
    reset_overrides()


@pytest.fixture
def rng():
    """Seeded generator for property tests."""
    return np.random.default_rng(20240601)
