# vqe_kernel/cli/commands.py
"""
Subcommand bodies
──────────────────────────────────────────────
    • cmd_lorenz   → equilibria, Jacobians, VQE + oracle spectra, stability
    • cmd_eigs     → VQE spectrum of an arbitrary square matrix
    • cmd_svd      → singular values from the real-axis spectrum of M†M
    • cmd_heatmap  → ε-plane scan written as CSV
Each returns the process exit code: 0 complete, 2 incomplete spectrum.
──────────────────────────────────────────────
"""
from __future__ import annotations

import math
from pathlib import Path
from typing import IO, Any, Dict, List, Optional, Tuple

from vqe_kernel.errors import EXIT_INCOMPLETE, EXIT_OK, DomainError, UsageError
from vqe_kernel.heatmap import HeatmapRequest, default_window, minimum_cell, scan, write_grid
from vqe_kernel.linalg import ComplexMatrix
from vqe_kernel.log import get_logger
from vqe_kernel.lorenz import (
    EquilibriumPoint,
    LorenzParams,
    classify_stability,
    equilibria,
    equilibrium,
    jacobian,
)
from vqe_kernel.oracle import eig_reference, svd_reference
from vqe_kernel.oracle.charpoly import MAX_DIM as ORACLE_MAX_DIM
from vqe_kernel.proxy import svd_proxy
from vqe_kernel.spectrum import SearchGrid, SpectrumReport, find_spectrum, search_bounds
from vqe_kernel.cli.options import RunConfig
from vqe_kernel.cli.report import (
    complex_json,
    dump_json,
    format_complex,
    matrix_json,
    matrix_table,
    spectrum_json,
    spectrum_table,
)

log = get_logger("cli")

SVD_STARTS = 9


def _emit(out: IO[str], lines: List[str]) -> None:
    out.write("\n".join(lines) + "\n")


def _exit_for(reports: List[SpectrumReport]) -> int:
    return EXIT_OK if all(r.complete for r in reports) else EXIT_INCOMPLETE


def _require_square(m: ComplexMatrix, run: RunConfig) -> int:
    rows, cols = m.shape
    if rows != cols:
        raise UsageError(f"matrix must be square, got {rows}x{cols}", shape=[rows, cols])
    if rows > run.max_dim:
        raise UsageError(f"n={rows} exceeds the capacity ceiling {run.max_dim} (raise it with --max-dim)", n=rows)
    return rows


def _oracle(m: ComplexMatrix) -> Optional[List[complex]]:
    if m.shape[0] > ORACLE_MAX_DIM:
        return None
    return list(eig_reference(m).eigenvalues)


# ── lorenz ──────────────────────────────────────────────


def _select_points(params: LorenzParams, point: str) -> List[EquilibriumPoint]:
    if point == "all":
        return equilibria(params)
    try:
        return [equilibrium(params, point)]
    except DomainError as exc:
        raise UsageError(exc.message, **exc.details) from exc


def cmd_lorenz(params: LorenzParams, point: str, run: RunConfig, out: IO[str]) -> int:
    settings = run.settings()
    reports: List[SpectrumReport] = []
    documents: List[Dict[str, Any]] = []
    lines: List[str] = [f"Lorenz σ={params.sigma:g} ρ={params.rho:g} β={params.beta:.6g}"]

    for e in _select_points(params, point):
        j = jacobian(params, e)
        report = find_spectrum(j, search_bounds(j), settings.spectrum)
        oracle = list(eig_reference(j).eigenvalues)
        if report.complete:
            report = report.with_stability(classify_stability(report.values()))
        oracle_stability = classify_stability(oracle)
        reports.append(report)

        documents.append({
            "branch": e.branch.value,
            "coordinates": list(e.coordinates),
            "jacobian": matrix_json(j),
            "spectrum": spectrum_json(report),
            "oracle": [complex_json(z) for z in oracle],
            "oracle_stability": oracle_stability.value,
        })
        x0, y0, z0 = e.coordinates
        lines.append(f"── {e.branch.value} equilibrium ({x0:.6g}, {y0:.6g}, {z0:.6g}) ──")
        lines.append("Jacobian:")
        lines.extend(matrix_table(j))
        lines.extend(spectrum_table(report, oracle))
        shown = report.stability.value if report.stability is not None else "unclassified (incomplete spectrum)"
        lines.append(f"stability: {shown}  (oracle: {oracle_stability.value})")

    if run.format == "json":
        _emit(out, [dump_json({
            "command": "lorenz",
            "params": {"sigma": params.sigma, "rho": params.rho, "beta": params.beta},
            "seed": run.seed,
            "points": documents,
        })])
    else:
        _emit(out, lines)
    return _exit_for(reports)


# ── eigs ──────────────────────────────────────────────


def cmd_eigs(m: ComplexMatrix, run: RunConfig, out: IO[str]) -> int:
    _require_square(m, run)
    settings = run.settings()
    report = find_spectrum(m, search_bounds(m), settings.spectrum)
    oracle = _oracle(m)

    if run.format == "json":
        _emit(out, [dump_json({
            "command": "eigs",
            "seed": run.seed,
            "spectrum": spectrum_json(report),
            "oracle": [complex_json(z) for z in oracle] if oracle is not None else None,
        })])
    else:
        _emit(out, spectrum_table(report, oracle))
    return _exit_for([report])


# ── svd ──────────────────────────────────────────────


def svd_grid(p: ComplexMatrix) -> SearchGrid:
    """Starts on [0, R] of the real axis; M†M has no eigenvalue off it."""
    r = search_bounds(p).re_max
    if r == 0.0:
        return SearchGrid(0.0, 0.0, 0.0, 0.0, 1, 1)
    return SearchGrid(0.0, r, 0.0, 0.0, SVD_STARTS, 1)


def cmd_svd(m: ComplexMatrix, run: RunConfig, out: IO[str]) -> int:
    cols = m.shape[1]
    if cols > run.max_dim:
        raise UsageError(f"{cols} columns exceed the capacity ceiling {run.max_dim} (raise it with --max-dim)", n=cols)
    settings = run.settings()
    p = svd_proxy(m)
    report = find_spectrum(p, svd_grid(p), settings.spectrum, real_axis=True)
    singular = sorted((math.sqrt(max(e.value.real, 0.0)) for e in report.estimates), reverse=True)
    reference = svd_reference(m)

    if run.format == "json":
        _emit(out, [dump_json({
            "command": "svd",
            "seed": run.seed,
            "singular_values": singular,
            "reference": reference,
            "spectrum": spectrum_json(report),
        })])
    else:
        lines = [f"{'σ (vqe)':>14}  {'σ (oracle)':>14}"]
        for k, ref in enumerate(reference):
            mine = f"{singular[k]:14.6f}" if k < len(singular) else f"{'-':>14}"
            lines.append(f"{mine}  {ref:14.6f}")
        status = "complete" if report.complete else "INCOMPLETE"
        lines.append(f"{status}: {len(singular)}/{cols} values from {report.starts_used} starts")
        lines.extend(f"note: {note}" for note in report.notes)
        _emit(out, lines)
    return _exit_for([report])


# ── heatmap ──────────────────────────────────────────────


def heatmap_matrix(
    matrix: Optional[ComplexMatrix],
    params: LorenzParams,
    point: str,
) -> ComplexMatrix:
    if matrix is not None:
        return matrix
    if point == "all":
        raise UsageError("heatmap scans one matrix; pick --point trivial, plus or minus")
    return jacobian(params, _select_points(params, point)[0])


def cmd_heatmap(
    m: ComplexMatrix,
    window: Tuple[Optional[float], Optional[float], Optional[float], Optional[float]],
    counts: Tuple[Optional[int], Optional[int]],
    destination: Path,
    run: RunConfig,
    out: IO[str],
) -> int:
    settings = run.settings()
    _require_square(m, run)
    defaults = default_window(m, settings.heatmap.margin)
    re_min, re_max, im_min, im_max = (given if given is not None else fallback for given, fallback in zip(window, defaults))
    re_count = counts[0] if counts[0] is not None else settings.heatmap.re_count
    im_count = counts[1] if counts[1] is not None else settings.heatmap.im_count

    req = HeatmapRequest(
        matrix=m,
        re_min=re_min, re_max=re_max, im_min=im_min, im_max=im_max,
        re_count=re_count, im_count=im_count,
        engine=run.engine,
        d=run.pad_d,
        seed=run.seed,
        inner=settings.spectrum.inner,
        layers=settings.spectrum.ansatz_layers,
    )
    grid = scan(req, settings.heatmap)
    write_grid(grid, destination)
    eps, value = minimum_cell(grid)

    if run.format == "json":
        _emit(out, [dump_json({
            "command": "heatmap",
            "path": str(destination),
            "engine": grid.engine,
            "re_count": re_count,
            "im_count": im_count,
            "minimum": {"epsilon": complex_json(eps), "value": value},
        })])
    else:
        _emit(out, [
            f"wrote {destination} ({re_count}x{im_count} cells, {grid.engine} engine)",
            f"minimum cell: ε = {format_complex(eps, 4)}  value = {value:.6e}",
        ])
    return EXIT_OK
