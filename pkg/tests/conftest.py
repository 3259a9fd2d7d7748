# Third party:
import numpy as np
import pytest
from hypothesis import settings

# quadrature-backed properties take tens of milliseconds per example
settings.register_profile("default", deadline=None, max_examples=25)
settings.load_profile("default")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def random_coeffs(rng: np.random.Generator, size: int, support: int) -> np.ndarray:
    coeffs = np.zeros(size, dtype=np.complex128)
    coeffs[:support] = rng.normal(size=support) + 1j * rng.normal(size=support)
    return coeffs / np.linalg.norm(coeffs)
