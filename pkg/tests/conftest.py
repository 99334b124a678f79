import numpy as np
import pytest

from phaseref import DensityOperator, FockSpace


def random_density(space: FockSpace, rng: np.random.Generator) -> DensityOperator:
    """Ginibre-style random full-rank density on the given space."""
    d = space.total_dimension
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    m = a @ a.conj().T
    return DensityOperator(space, m / np.trace(m).real)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260826)
