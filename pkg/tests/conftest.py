"""
Pytest configuration and shared fixtures for the binary-forms engine tests.

Provides fixtures to:
1. Put the repository root on sys.path
2. Build the common form contexts
3. Keep BINFORM_* environment settings from leaking between tests
"""
import random
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from forms import FormContext


@pytest.fixture(autouse=True)
def clean_binform_env(monkeypatch):
    """Tests start without debug checks, tracing or a family cache directory."""
    for name in (
        "BINFORM_DEBUG_CHECKS",
        "BINFORM_TRACING",
        "BINFORM_CONSOLE_SPANS",
        "BINFORM_CACHE_DIR",
        "BINFORM_JOBS",
        "BINFORM_LOG_LEVEL",
        "BINFORM_LOG_FORMAT",
    ):
        monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture
def debug_checks(monkeypatch):
    """Turn on the iterated-D* and Bareiss/cofactor cross-checks."""
    monkeypatch.setenv("BINFORM_DEBUG_CHECKS", "true")
    yield


@pytest.fixture
def ctx2():
    return FormContext(2, ("a",))


@pytest.fixture
def ctx3():
    return FormContext(3, ("a",))


@pytest.fixture
def rng():
    """Deterministic generator for property tests."""
    return random.Random(20240611)
