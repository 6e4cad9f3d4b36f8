from monopsono.common_tests.conftest import _reset_settings, rng  # noqa: F401
