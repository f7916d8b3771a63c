# vqe_kernel/heatmap/csvfile.py
"""
Heatmap CSV
──────────────────────────────────────────────
    re,im,value
    <one row per cell: Im ascending outer, Re ascending inner>

Line feed only; numbers in shortest round-trip form (repr), so reading a
file back gives the written floats bit for bit.
──────────────────────────────────────────────
"""
from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import IO, Tuple, Union

import numpy as np

from vqe_kernel.errors import InputError, OutputError
from vqe_kernel.heatmap.scan import HeatmapGrid

HEADER = ("re", "im", "value")

Destination = Union[str, Path, IO[str]]


def _rows(grid: HeatmapGrid):
    for j, im in enumerate(grid.im_axis):
        for i, re in enumerate(grid.re_axis):
            yield repr(float(re)), repr(float(im)), repr(float(grid.values[i, j]))


def render_grid(grid: HeatmapGrid) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerows(_rows(grid))
    return buffer.getvalue()


def write_grid(grid: HeatmapGrid, destination: Destination) -> None:
    text = render_grid(grid)
    if hasattr(destination, "write"):
        destination.write(text)  # type: ignore[union-attr]
        return
    path = Path(destination)  # type: ignore[arg-type]
    try:
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write heatmap to {path}: {exc.strerror or exc}", path=str(path)) from exc


def read_grid(source: Union[str, Path]) -> HeatmapGrid:
    path = Path(source)
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise InputError(f"cannot read heatmap {path}: {exc.strerror or exc}", path=str(path)) from exc

    if not rows or tuple(rows[0]) != HEADER:
        raise InputError(f"{path} does not start with the header re,im,value", row=0)
    cells = []
    for number, row in enumerate(rows[1:], start=1):
        if len(row) != 3:
            raise InputError(f"expected 3 fields, got {len(row)}", row=number)
        try:
            cells.append(tuple(float(field) for field in row))
        except ValueError as exc:
            raise InputError(f"non-numeric field: {exc}", row=number) from exc

    re_axis = np.array(sorted({c[0] for c in cells}))
    im_axis = np.array(sorted({c[1] for c in cells}))
    if len(cells) != re_axis.size * im_axis.size:
        raise InputError("cells do not form a complete rectangular grid", cells=len(cells))
    values = np.empty((re_axis.size, im_axis.size))
    re_index = {v: i for i, v in enumerate(re_axis.tolist())}
    im_index = {v: j for j, v in enumerate(im_axis.tolist())}
    for re, im, value in cells:
        values[re_index[re], im_index[im]] = value
    return HeatmapGrid(re_axis=re_axis, im_axis=im_axis, values=values)


def minimum_cell(grid: HeatmapGrid) -> Tuple[complex, float]:
    i, j = np.unravel_index(int(np.argmin(grid.values)), grid.values.shape)
    return grid.epsilon(int(i), int(j)), float(grid.values[i, j])
