"""
Shared fixtures for the concavity test suite
"""

import pytest

from concavity.utils.config import CONFIG_ENV_VAR, Settings
from concavity.utils.logging import configure_logging


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch):
    """No config file or log level leaks in from the developer's shell"""
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    monkeypatch.delenv('CONCAVITY_LOG_LEVEL', raising=False)
    configure_logging('WARNING')


@pytest.fixture
def fast_settings():
    """Coarser scans for tests that run many radius searches"""
    return Settings(circle_samples=512, rotation_count=2)
