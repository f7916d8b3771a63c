# vqe_kernel/spectrum/finder.py
"""
Grid search for the whole spectrum
──────────────────────────────────────────────
For each grid start (row-major, seed = inner.rng_seed + start index):
    1. find_eigenvalue from the start, stopping once the residual is under
       STOP_FRACTION·τ; a path that enters δ of a held value is dropped
    2. reject unless residual < τ
    3. polish: extra outer steps at a tighter inner tolerance, down to
       POLISH_FRACTION·τ; a residual that does not drop far enough marks the
       value as suspect
    4. real M: |Im| ≤ im_tol snaps to the real axis, otherwise the
       conjugate is recorded as well
    5. dedup within δ; stop once n distinct values are held. More than n
       means one of them is spurious and the report is not complete
──────────────────────────────────────────────
"""
from __future__ import annotations

from typing import List, Optional

from vqe_kernel.config import SpectrumSettings
from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, is_real
from vqe_kernel.log import get_logger
from vqe_kernel.proxy import default_pad
from vqe_kernel.spectrum.estimates import DedupDecision, EigenvalueEstimate, SpectrumReport, dedup
from vqe_kernel.spectrum.grid import SearchGrid
from vqe_kernel.vqe import OuterResult, find_eigenvalue

log = get_logger("spectrum")

GUARD_DROP = 0.5
GUARD_FLOOR = 1e-3
STOP_FRACTION = 1e-2
POLISH_FRACTION = 1e-4


def pad_for(m: ComplexMatrix, grid: SearchGrid, settings: SpectrumSettings) -> float:
    if settings.pad_d is not None:
        return settings.pad_d
    return default_pad(m, grid.radius)


def _polish(
    m: ComplexMatrix,
    found: OuterResult,
    settings: SpectrumSettings,
    seed: int,
    d: float,
    tau: float,
    real_axis: bool,
) -> OuterResult:
    inner = settings.inner.model_copy(update={
        "gradient_tolerance": settings.inner.gradient_tolerance / settings.polish_tightening,
        "rng_seed": seed,
    })
    outer = settings.outer.model_copy(update={"max_iterations": max(1, settings.polish_steps)})
    return find_eigenvalue(
        m, found.epsilon_star, inner, outer, d,
        accept_tol=tau, real_axis=real_axis, layers=settings.ansatz_layers,
        warm_start=found.inner.theta_star, stop_below=POLISH_FRACTION * tau,
    )


def _passes_guard(found: OuterResult, polished: OuterResult, tau: float) -> bool:
    return polished.residual <= max(GUARD_DROP * found.residual, GUARD_FLOOR * tau)


def find_spectrum(
    m: ComplexMatrix,
    grid: SearchGrid,
    settings: Optional[SpectrumSettings] = None,
    d: Optional[float] = None,
    real_axis: bool = False,
) -> SpectrumReport:
    m = as_matrix(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ShapeError(f"find_spectrum needs a square matrix, got {m.shape}", shape=m.shape)
    settings = settings or SpectrumSettings()
    d = pad_for(m, grid, settings) if d is None else d
    if not d > 0:
        raise DomainError("pad value d must be positive", d=d)

    real = is_real(m)
    tau = settings.accept_threshold(m)
    delta = settings.dedup_delta(m)
    im_tol = settings.realness_tol(m)

    estimates: List[EigenvalueEstimate] = []
    suspect: List[EigenvalueEstimate] = []
    starts_used = 0

    for index, start in enumerate(grid.points()):
        starts_used += 1
        seed = settings.inner.rng_seed + index
        found = find_eigenvalue(
            m, start, settings.inner.with_seed(seed), settings.outer, d,
            accept_tol=tau, real_axis=real_axis, layers=settings.ansatz_layers,
            stop_below=STOP_FRACTION * tau,
            avoid=[e.value for e in estimates], avoid_radius=delta,
        )
        if found.abandoned:
            log.debug(f"⏭️ [spectrum] start {start:.4g} led back to a held value")
            continue
        if not found.accepted:
            continue

        polished = _polish(m, found, settings, seed, d, tau, real_axis)
        best = polished if polished.residual <= found.residual else found
        value = best.epsilon_star
        # a conjugate closer than δ would be merged into its partner
        if real and abs(value.imag) <= max(im_tol, 0.5 * delta):
            value = complex(value.real, 0.0)
        candidate = EigenvalueEstimate(value=value, residual=best.residual, start_point=start)

        if not _passes_guard(found, polished, tau):
            log.warning(
                f"⚠️ [spectrum] {value:.6g} from start {start:.4g} did not polish "
                f"({found.residual:.3e} → {polished.residual:.3e}); marked suspect"
            )
            suspect.append(candidate)
            continue

        estimates, decision = dedup(estimates, candidate, delta)
        if real and value.imag != 0.0:
            estimates, _ = dedup(estimates, candidate.conjugate(), delta)
        if decision is DedupDecision.APPENDED:
            log.info(f"✅ [spectrum] accepted {value:.6g} (residual {best.residual:.3e}, start {start:.4g})")

        if len(estimates) >= n:
            break

    complete = len(estimates) == n
    notes: List[str] = []
    if len(estimates) > n:
        notes.append(
            f"found {len(estimates)} values for a {n}x{n} matrix; at least one is spurious"
        )
        log.warning(f"⚠️ [spectrum] {notes[-1]}")
    elif not complete:
        notes.append(
            f"found {len(estimates)} of {n} eigenvalues after {starts_used} starts; "
            f"values closer than {delta:.3g} count once, so a repeated eigenvalue leaves the report short"
        )
        log.warning(f"⚠️ [spectrum] {notes[-1]}")

    return SpectrumReport(
        matrix_dim=n,
        estimates=sorted(estimates, key=lambda e: (e.value.real, e.value.imag)),
        complete=complete,
        starts_used=starts_used,
        suspect=suspect,
        notes=notes,
    )
