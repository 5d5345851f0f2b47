"""Unit tests for environment configuration"""

import importlib

import pytest

from src import config

ENV_VARS = [
    "FSALG_HASH_THREADS",
    "FSALG_HASH_CHUNK_SIZE",
    "FSALG_ORDER_LIMIT",
    "FSALG_VERIFY_CHAIN",
    "FSALG_VERIFY_ROOTS",
    "FSALG_VERIFY_FILE_VALUES",
]


@pytest.fixture
def reload_config(monkeypatch):
    """Reload src.config under a clean environment and restore it afterwards"""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    with pytest.MonkeyPatch.context() as mp:
        mp.setattr("dotenv.load_dotenv", lambda *args, **kwargs: False)
        yield lambda: importlib.reload(config)
    monkeypatch.undo()
    importlib.reload(config)


class TestConfig:
    """Test configuration defaults and overrides"""

    def test_defaults(self, reload_config):
        """Test values without any environment overrides"""
        # Act
        reloaded = reload_config()

        # Assert
        assert reloaded.HASH_ALGORITHM == "sha256"
        assert reloaded.HASH_CHUNK_SIZE == 65536
        assert 1 <= reloaded.HASH_THREADS <= 8
        assert reloaded.ORDER_LIMIT == 1000
        assert reloaded.VERIFY_CHAIN == 3
        assert reloaded.VERIFY_ROOTS == 1
        assert reloaded.VERIFY_FILE_VALUES == 2
        assert reloaded.SNAPSHOT_HEADER == "FSSNAP 1"
        assert reloaded.SCRIPT_HEADER == "FSCMDS 1"

    def test_environment_overrides(self, reload_config, monkeypatch):
        """Test FSALG_* variables replace the defaults"""
        # Arrange
        monkeypatch.setenv("FSALG_HASH_THREADS", "2")
        monkeypatch.setenv("FSALG_ORDER_LIMIT", "50")
        monkeypatch.setenv("FSALG_VERIFY_FILE_VALUES", "3")

        # Act
        reloaded = reload_config()

        # Assert
        assert reloaded.HASH_THREADS == 2
        assert reloaded.ORDER_LIMIT == 50
        assert reloaded.VERIFY_FILE_VALUES == 3

    def test_invalid_override(self, reload_config, monkeypatch):
        """Test a non-numeric override fails at import"""
        monkeypatch.setenv("FSALG_ORDER_LIMIT", "lots")

        with pytest.raises(ValueError):
            reload_config()
