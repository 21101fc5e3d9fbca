"""
Shared pytest fixtures for GenOsc
"""
import pytest

from config import Config
from recurrence import builtin_family


@pytest.fixture
def hermite():
    return builtin_family("hermite")


@pytest.fixture
def laguerre0():
    return builtin_family("laguerre", alpha=0.0)


@pytest.fixture
def legendre():
    return builtin_family("legendre")


@pytest.fixture
def chebyshev():
    return builtin_family("chebyshev_first")


@pytest.fixture
def symmetric_families(hermite, legendre, chebyshev):
    return [hermite, legendre, chebyshev]


@pytest.fixture
def restore_config():
    """Snapshot Config attributes and put them back after the test"""
    saved = Config.to_dict()
    yield Config
    Config._update_from_dict(saved)
