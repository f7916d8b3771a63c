# vqe_kernel/heatmap/request.py
from __future__ import annotations

from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from vqe_kernel.config import GDConfig, default_inner_config
from vqe_kernel.linalg import ComplexMatrix, as_matrix, is_real
from vqe_kernel.spectrum import search_bounds

Engine = Literal["vqe", "exact"]


class HeatmapRequest(BaseModel):
    """One ε-window scan of min⟨Ψ|H(ε)|Ψ⟩; engine=None lets the cell count decide."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    matrix: np.ndarray
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    re_count: int = Field(ge=2)
    im_count: int = Field(ge=2)
    engine: Optional[Engine] = None
    d: Optional[float] = Field(default=None, gt=0)
    seed: int = Field(default=0, ge=0)
    inner: GDConfig = Field(default_factory=default_inner_config)
    layers: int = Field(default=3, gt=0)

    @field_validator("matrix", mode="before")
    @classmethod
    def _square_matrix(cls, value) -> np.ndarray:
        m = as_matrix(value)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"matrix must be square, got {m.shape}")
        return m

    @model_validator(mode="after")
    def _ordered(self) -> "HeatmapRequest":
        if not self.re_min < self.re_max:
            raise ValueError("re_min must be below re_max")
        if not self.im_min < self.im_max:
            raise ValueError("im_min must be below im_max")
        return self

    @property
    def cells(self) -> int:
        return self.re_count * self.im_count

    @property
    def radius(self) -> float:
        return float(np.hypot(max(abs(self.re_min), abs(self.re_max)), max(abs(self.im_min), abs(self.im_max))))


def default_window(m: ComplexMatrix, margin: float = 1.1) -> Tuple[float, float, float, float]:
    """The spectrum search box widened by `margin` (upper half-plane for real M)."""
    m = as_matrix(m)
    grid = search_bounds(m)
    r = max(abs(grid.re_min), abs(grid.re_max), abs(grid.im_max)) or 1.0
    r *= margin
    if is_real(m):
        return -r, r, 0.0, r
    return -r, r, -r, r

