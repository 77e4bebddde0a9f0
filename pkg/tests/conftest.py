"""Shared fixtures."""

import pytest

from qrk.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings so QRK_* variables set by a test take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
