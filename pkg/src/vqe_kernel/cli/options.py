# vqe_kernel/cli/options.py
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from vqe_kernel.config import (
    GDConfig,
    HeatmapSettings,
    SolverSettings,
    SpectrumSettings,
    default_inner_config,
    default_outer_config,
)
from vqe_kernel.errors import UsageError


def parse_beta(text: str) -> float:
    """Decimal ("2.6667") or fraction ("8/3")."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--beta expects a number or p/q, got {text!r}", beta=text)
    return float(value)


def _override(cfg: GDConfig, **updates: Any) -> GDConfig:
    updates = {k: v for k, v in updates.items() if v is not None}
    if not updates:
        return cfg
    return GDConfig.model_validate({**cfg.model_dump(), **updates})


class RunConfig(BaseModel):
    """Flags shared by every subcommand."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    seed: int = Field(default=0, ge=0)
    format: Literal["table", "json"] = "table"
    engine: Optional[Literal["vqe", "exact"]] = None
    inner_lr: Optional[float] = Field(default=None, gt=0)
    outer_lr: Optional[float] = Field(default=None, gt=0)
    restarts: Optional[int] = Field(default=None, ge=0)
    accept_tol: Optional[float] = Field(default=None, gt=0)
    dedup_radius: Optional[float] = Field(default=None, gt=0)
    pad_d: Optional[float] = Field(default=None, gt=0)
    max_dim: int = Field(default=8, gt=0)
    verbose: int = Field(default=0, ge=0)

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        fields: Dict[str, Any] = {name: getattr(args, name) for name in cls.model_fields if hasattr(args, name)}
        return cls.model_validate({k: v for k, v in fields.items() if v is not None})

    def settings(self) -> SolverSettings:
        inner = _override(default_inner_config(self.seed), learning_rate=self.inner_lr, restarts=self.restarts)
        outer = _override(default_outer_config(self.seed), learning_rate=self.outer_lr)
        spectrum = SpectrumSettings(
            inner=inner,
            outer=outer,
            accept_tol=self.accept_tol,
            dedup_radius=self.dedup_radius,
            pad_d=self.pad_d,
        )
        return SolverSettings(spectrum=spectrum, heatmap=HeatmapSettings(), max_dim=self.max_dim)
