"""Pytest configuration for IdealExplorer integration tests."""

from pathlib import Path

import pytest

from monomial_ideal_core.serialization import load_ideal

IDEALS_DIR = Path(__file__).resolve().parent.parent / "ideals"


def pytest_configure(config):
    """Configure pytest markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )


@pytest.fixture(scope="session")
def ideals_dir():
    """Directory holding the sample ideal files."""
    return IDEALS_DIR


@pytest.fixture(scope="session")
def associated_example():
    """The seven-variable ideal with eight embedded primes."""
    return load_ideal(IDEALS_DIR / "associated_example.ideal")
