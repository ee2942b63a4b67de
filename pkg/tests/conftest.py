"""
pytest configuration and fixtures.

Isolates tests from user configuration files and QUATPLURI_* environment
variables, and loads the shared sample data.
"""

import pytest
from click.testing import CliRunner

# Import all sample data and builder fixtures
# This makes them available to all tests without explicit imports
pytest_plugins = [
    "tests.fixtures.mock_data",
]

ENV_KEYS = ("QUATPLURI_TOL", "QUATPLURI_SEED", "QUATPLURI_CASES", "QUATPLURI_LOG_LEVEL")


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """No config file is found and no environment override is set."""
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr(
        "quatpluri.core.config._get_config_paths",
        lambda: [str(tmp_path / "missing.yaml")],
    )


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
