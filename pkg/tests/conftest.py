import pytest

from aeroshield import Engine, EngineConfig


@pytest.fixture(scope="session")
def config():
    return EngineConfig()


@pytest.fixture(scope="session")
def engine():
    return Engine()


@pytest.fixture(autouse=True)
def _isolate_run_log_env(monkeypatch):
    monkeypatch.delenv("AEROSHIELD_LOG", raising=False)
