"""Pytest configuration and fixtures for the four-mode toolkit tests."""

import math

import numpy as np
import pytest

from fourmode.app import create_app
from fourmode.schemas import CouplingSet

# Ladder 5:3:4, the simplest Pythagorean configuration: (p, q) = (3, 1).
TAU_534 = math.pi / (2.0 * math.sqrt(2.5))


@pytest.fixture
def app():
    """Create a Flask app configured for testing."""
    app = create_app()
    app.config["TESTING"] = True
    yield app


@pytest.fixture
def client(app):
    """Create a test client for the Flask app."""
    return app.test_client()


@pytest.fixture
def ladder_534():
    """Ladder couplings in the ratio 5:3:4."""
    return CouplingSet(v12=5.0, v23=3.0, v34=4.0)


@pytest.fixture
def tau_534():
    """Complete-transfer time of the 5:3:4 ladder."""
    return TAU_534


@pytest.fixture
def symmetric_diamond():
    return CouplingSet(v12=1.0, v23=1.0, v34=1.0, v14=1.0)


@pytest.fixture
def rng():
    """Seeded generator for property suites."""
    return np.random.default_rng(20240917)


@pytest.fixture
def random_couplings(rng):
    """1000 coupling sets drawn uniformly from [-10, 10]^4."""
    return rng.uniform(-10.0, 10.0, size=(1000, 4))
