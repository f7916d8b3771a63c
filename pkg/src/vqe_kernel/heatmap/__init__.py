"""
ε-plane surfaces of the minimised expectation value, emitted as CSV for
external plotting.
"""
from .csvfile import minimum_cell, read_grid, render_grid, write_grid
from .request import HeatmapRequest, default_window
from .scan import HeatmapGrid, exact_engine, pick_engine, scan, vqe_engine

__all__ = [
    "HeatmapGrid",
    "HeatmapRequest",
    "default_window",
    "exact_engine",
    "minimum_cell",
    "pick_engine",
    "read_grid",
    "render_grid",
    "scan",
    "vqe_engine",
    "write_grid",
]
