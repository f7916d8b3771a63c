# src/vqe_kernel/config/base_settings.py
"""
Solver settings
──────────────────────────────────────────────
All tunables live here as frozen pydantic models. Nothing is read from the
environment: defaults below, overridden only by explicit CLI flags or by
callers building their own models.
──────────────────────────────────────────────
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class GDConfig(_Frozen):
    """Gradient descent with Armijo backtracking."""

    learning_rate: float = Field(gt=0)
    max_iterations: int = Field(gt=0)
    gradient_tolerance: float = Field(gt=0)
    restarts: int = Field(default=0, ge=0)
    fd_step: float = Field(default=1e-5, gt=0)
    rng_seed: int = Field(default=0, ge=0)

    armijo_factor: float = Field(default=0.5, gt=0, lt=1)
    sufficient_decrease: float = Field(default=1e-4, gt=0, lt=1)
    step_growth: float = Field(default=1.0, ge=1)
    max_step: float = Field(default=1e3, gt=0)
    min_step: float = Field(default=1e-14, gt=0)
    max_backtracks: int = Field(default=60, gt=0)
    value_tolerance: float = Field(default=1e-15, ge=0)

    @model_validator(mode="after")
    def _step_bounds(self) -> "GDConfig":
        if self.min_step >= self.learning_rate:
            raise ValueError("min_step must be smaller than learning_rate")
        return self

    def with_seed(self, seed: int) -> "GDConfig":
        return self.model_copy(update={"rng_seed": int(seed)})


def default_inner_config(seed: int = 0) -> GDConfig:
    return GDConfig(
        learning_rate=0.1,
        max_iterations=5000,
        gradient_tolerance=1e-10,
        restarts=3,
        fd_step=1e-5,
        rng_seed=seed,
    )


def default_outer_config(seed: int = 0) -> GDConfig:
    return GDConfig(
        learning_rate=0.05,
        max_iterations=500,
        gradient_tolerance=1e-8,
        fd_step=1e-6,
        step_growth=2.0,
        min_step=1e-10,
        max_backtracks=12,
        rng_seed=seed,
    )


class SpectrumSettings(_Frozen):
    """Acceptance, deduplication and polishing knobs for the grid search."""

    inner: GDConfig = Field(default_factory=default_inner_config)
    outer: GDConfig = Field(default_factory=default_outer_config)

    accept_scale: float = Field(default=1e-8, gt=0)
    dedup_scale: float = Field(default=1e-3, gt=0)
    im_tol_scale: float = Field(default=1e-5, gt=0)
    polish_steps: int = Field(default=20, ge=0)
    polish_tightening: float = Field(default=10.0, ge=1)
    ansatz_layers: int = Field(default=3, gt=0)

    # absolute overrides (CLI --accept-tol / --dedup-radius / --pad-d)
    accept_tol: Optional[float] = Field(default=None, gt=0)
    dedup_radius: Optional[float] = Field(default=None, gt=0)
    pad_d: Optional[float] = Field(default=None, gt=0)

    def accept_threshold(self, matrix: np.ndarray) -> float:
        if self.accept_tol is not None:
            return self.accept_tol
        return self.accept_scale * max(1.0, _fro(matrix) ** 2)

    def dedup_delta(self, matrix: np.ndarray) -> float:
        if self.dedup_radius is not None:
            return self.dedup_radius
        return self.dedup_scale * max(1.0, _fro(matrix))

    def realness_tol(self, matrix: np.ndarray) -> float:
        return self.im_tol_scale * max(1.0, _fro(matrix))


class HeatmapSettings(_Frozen):
    exact_threshold_cells: int = Field(default=400, gt=0)
    re_count: int = Field(default=81, ge=2)
    im_count: int = Field(default=25, ge=2)
    margin: float = Field(default=1.1, ge=1)


class SolverSettings(_Frozen):
    """Everything one CLI invocation needs."""

    spectrum: SpectrumSettings = Field(default_factory=SpectrumSettings)
    heatmap: HeatmapSettings = Field(default_factory=HeatmapSettings)
    max_dim: int = Field(default=8, gt=0)


def _fro(matrix: np.ndarray) -> float:
    value = float(np.linalg.norm(matrix))
    return value if math.isfinite(value) else 0.0
