import numpy as np
import pytest

from medmap import LOWER, FourVector, MediumSpec


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def random_medium():
    """Factory for random media; spans both sides of the Cherenkov threshold."""

    def make(rng, n_range=(1.0, 2.5), v_max=0.9, mu_range=(0.5, 2.0)):
        n = rng.uniform(*n_range)
        mu = rng.uniform(*mu_range)
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        speed = rng.uniform(0.0, v_max)
        return MediumSpec(n=n, mu=mu, velocity=tuple(speed * direction))

    return make


@pytest.fixture
def random_null():
    """Factory for random null four-vectors (either sign of frequency)."""

    def make(rng):
        spatial = rng.normal(size=3)
        norm = np.linalg.norm(spatial)
        sign = rng.choice([-1.0, 1.0])
        return FourVector(np.concatenate(([sign * norm], spatial)), LOWER)

    return make


@pytest.fixture
def random_antisymmetric():
    def make(rng, scale=1.0):
        a = scale * rng.normal(size=(4, 4))
        return a - a.T

    return make
