import numpy as np
import pytest

from hybridspin.model import ModelParams


@pytest.fixture
def fig_params() -> ModelParams:
    """The reference parameter set used by the bundled figure sweeps."""
    return ModelParams(b1=0.3, b2=-0.7, j=0.0, jz=1.0, k=0.2, k1=-0.1,
                       k2=0.22, dz=0.32, gamma=-0.87, lam=0.31)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)


def random_hermitian(rng: np.random.Generator, dim: int, scale: float = 1.0) -> np.ndarray:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (m + m.conj().T) / 2
