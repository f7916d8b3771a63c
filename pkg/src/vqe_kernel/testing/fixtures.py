"""
──────────────────────────────────────────────────────────────────────────────
vqe_kernel.testing.fixtures
──────────────────────────────────────────────────────────────────────────────
Purpose:
    Reusable pytest fixtures for code built on the kernel.

Exports:
    - rng              → seeded numpy Generator, fresh per test
    - lorenz_classic   → LorenzParams(10, 28, 8/3)
    - random_complex   → factory: n×m complex Gaussian matrix
    - random_hermitian → factory: n×n Hermitian matrix
    - fast_settings    → SpectrumSettings with one inner restart

Usage in your test:
    pytest_plugins = ["vqe_kernel.testing.fixtures"]

    def test_trace(random_complex):
        m = random_complex(3)
        ...
──────────────────────────────────────────────────────────────────────────────
"""
from __future__ import annotations

import numpy as np
import pytest

from vqe_kernel.config import SpectrumSettings, default_inner_config, default_outer_config
from vqe_kernel.lorenz import LorenzParams

SEED = 20240917


def complex_gaussian(rng: np.random.Generator, rows: int, cols: int | None = None) -> np.ndarray:
    cols = rows if cols is None else cols
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def hermitian_from(rng: np.random.Generator, n: int) -> np.ndarray:
    a = complex_gaussian(rng, n)
    return 0.5 * (a + np.conj(a).T)


# ──────────────────────────────────────────────────────────────
# Randomness
# ──────────────────────────────────────────────────────────────
@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture()
def random_complex(rng):
    def make(rows: int, cols: int | None = None) -> np.ndarray:
        return complex_gaussian(rng, rows, cols)
    return make


@pytest.fixture()
def random_hermitian(rng):
    def make(n: int) -> np.ndarray:
        return hermitian_from(rng, n)
    return make


# ──────────────────────────────────────────────────────────────
# Domain objects
# ──────────────────────────────────────────────────────────────
@pytest.fixture()
def lorenz_classic() -> LorenzParams:
    return LorenzParams(sigma=10.0, rho=28.0, beta=8.0 / 3.0)


@pytest.fixture()
def fast_settings() -> SpectrumSettings:
    """Default tolerances with a single inner restart, for quicker searches."""
    inner = default_inner_config().model_copy(update={"restarts": 1})
    return SpectrumSettings(inner=inner, outer=default_outer_config())
