# vqe_kernel/heatmap/scan.py
"""
ε-plane scans of the minimised expectation value
──────────────────────────────────────────────
    • exact → smallest eigenvalue of H(ε) from the Jacobi oracle, per cell
    • vqe   → minimize_expectation on the padded proxy; each Im row is one
              warm-start chain, swept in serpentine order (even rows Re
              ascending, odd rows descending) and seeded with seed + row
Engines are looked up in the registry under kind "engine".
──────────────────────────────────────────────
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from vqe_kernel.config import HeatmapSettings
from vqe_kernel.heatmap.request import HeatmapRequest
from vqe_kernel.log import get_logger
from vqe_kernel.oracle import hermitian_eig_reference
from vqe_kernel.proxy import augment, default_pad, hermitianize
from vqe_kernel.registry import register, resolve
from vqe_kernel.vqe import minimize_expectation

log = get_logger("heatmap")


@dataclass(frozen=True, eq=False)
class HeatmapGrid:
    """values[i, j] belongs to ε = re_axis[i] + 1j·im_axis[j]."""

    re_axis: np.ndarray
    im_axis: np.ndarray
    values: np.ndarray
    engine: str = ""

    @property
    def shape(self):
        return self.values.shape

    def epsilon(self, i: int, j: int) -> complex:
        return complex(float(self.re_axis[i]), float(self.im_axis[j]))


def _axes(req: HeatmapRequest):
    return (
        np.linspace(req.re_min, req.re_max, req.re_count),
        np.linspace(req.im_min, req.im_max, req.im_count),
    )


def exact_engine(req: HeatmapRequest) -> np.ndarray:
    re_axis, im_axis = _axes(req)
    values = np.empty((req.re_count, req.im_count))
    for j, im in enumerate(im_axis):
        for i, re in enumerate(re_axis):
            values[i, j] = hermitian_eig_reference(hermitianize(req.matrix, complex(re, im)))[0]
    return values


def vqe_engine(req: HeatmapRequest) -> np.ndarray:
    re_axis, im_axis = _axes(req)
    d = req.d if req.d is not None else default_pad(req.matrix, req.radius)
    values = np.empty((req.re_count, req.im_count))
    warm_cfg = req.inner.model_copy(update={"restarts": 0})

    for j, im in enumerate(im_axis):
        order = range(req.re_count) if j % 2 == 0 else range(req.re_count - 1, -1, -1)
        theta = None
        for i in order:
            h = augment(hermitianize(req.matrix, complex(re_axis[i], im)), d)
            cfg = req.inner.with_seed(req.seed + j) if theta is None else warm_cfg
            result = minimize_expectation(h, cfg, warm_start=theta, layers=req.layers)
            values[i, j] = result.value
            theta = result.theta_star
        log.debug(f"[heatmap] row {j + 1}/{req.im_count} done (Im ε = {im:.4g})")
    return values


register("engine", "exact", exact_engine)
register("engine", "vqe", vqe_engine)


def pick_engine(req: HeatmapRequest, settings: Optional[HeatmapSettings] = None) -> str:
    if req.engine is not None:
        return req.engine
    settings = settings or HeatmapSettings()
    return "exact" if req.cells > settings.exact_threshold_cells else "vqe"


def scan(req: HeatmapRequest, settings: Optional[HeatmapSettings] = None) -> HeatmapGrid:
    engine = pick_engine(req, settings)
    values = resolve("engine", engine)(req)
    re_axis, im_axis = _axes(req)
    log.info(f"✅ [heatmap] {engine} engine filled {req.re_count}x{req.im_count} cells")
    return HeatmapGrid(re_axis=re_axis, im_axis=im_axis, values=values, engine=engine)
