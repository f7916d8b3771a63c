"""Solver configuration models (no environment lookups)."""
from .base_settings import (
    GDConfig,
    HeatmapSettings,
    SolverSettings,
    SpectrumSettings,
    default_inner_config,
    default_outer_config,
)

__all__ = [
    "GDConfig",
    "HeatmapSettings",
    "SolverSettings",
    "SpectrumSettings",
    "default_inner_config",
    "default_outer_config",
]
