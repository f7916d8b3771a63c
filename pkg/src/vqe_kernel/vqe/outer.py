# vqe_kernel/vqe/outer.py
"""
Outer loop: drive g(ε) = min_θ ⟨Ψ(θ)|H(ε)|Ψ(θ)⟩ to zero over ε ∈ ℂ
──────────────────────────────────────────────
    • envelope_gradient               → analytic ∇g with the inner minimiser held fixed
    • outer_finite_difference_gradient → central differences of g (used when the
                                         inner loop did not converge)
    • find_eigenvalue                 → Armijo descent over (Re ε, Im ε); every inner
                                         solve after the first warm-starts from the
                                         previous θ*
──────────────────────────────────────────────
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from vqe_kernel.ansatz import AnsatzParams, Statevector
from vqe_kernel.config import GDConfig
from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, as_vector, frobenius_norm
from vqe_kernel.log import get_logger
from vqe_kernel.proxy import augment, hermitianize
from vqe_kernel.vqe.inner import InnerResult, minimize_expectation
from vqe_kernel.vqe.linesearch import backtrack, next_trial

log = get_logger("vqe")

ACCEPT_SCALE = 1e-8


@dataclass(frozen=True, eq=False)
class OuterResult:
    epsilon_star: complex
    residual: float
    trace: List[Tuple[complex, float]]
    accepted: bool
    inner: InnerResult
    iterations: int = 0
    converged: bool = field(default=False)
    # left early because the path came within avoid_radius of a known value
    abandoned: bool = False


def accept_threshold(m: ComplexMatrix) -> float:
    """τ = 1e-8 · max(1, ‖M‖_F²)."""
    return ACCEPT_SCALE * max(1.0, frobenius_norm(m) ** 2)


def _square(m: ComplexMatrix) -> ComplexMatrix:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"find_eigenvalue needs a square matrix, got {m.shape}", shape=m.shape)
    return m


def envelope_gradient(
    m: ComplexMatrix,
    eps: complex,
    psi_min: Union[Statevector, np.ndarray],
) -> Tuple[float, float]:
    """
    (∂g/∂Re ε, ∂g/∂Im ε) = (−2 Re⟨ψ|(M−εI)|ψ⟩, −2 Im⟨ψ|(M−εI)|ψ⟩)

    Only the leading n amplitudes take part: the padded block of H(ε) does
    not depend on ε.
    """
    m = _square(m)
    n = m.shape[0]
    amps = psi_min.amplitudes if isinstance(psi_min, Statevector) else as_vector(psi_min)
    if amps.shape[0] < n:
        raise ShapeError(f"state of length {amps.shape[0]} cannot cover a {n}x{n} matrix")
    psi = amps[:n]
    shifted = m @ psi - complex(eps) * psi
    z = np.vdot(psi, shifted)
    return -2.0 * float(z.real), -2.0 * float(z.imag)


def _inner_at(
    m: ComplexMatrix,
    eps: complex,
    cfg: GDConfig,
    d: float,
    warm_start: Optional[AnsatzParams],
    layers: int,
) -> InnerResult:
    return minimize_expectation(augment(hermitianize(m, eps), d), cfg, warm_start=warm_start, layers=layers)


def outer_finite_difference_gradient(
    m: ComplexMatrix,
    eps: complex,
    inner_cfg: GDConfig,
    d: float,
    step: float = 1e-6,
    warm_start: Optional[AnsatzParams] = None,
    layers: int = 3,
) -> Tuple[float, float]:
    """Central differences of g along Re ε and Im ε, each evaluation a full inner solve."""
    m = _square(m)
    eps = complex(eps)
    parts = []
    for direction in (1.0, 1j):
        up = _inner_at(m, eps + step * direction, inner_cfg, d, warm_start, layers).value
        down = _inner_at(m, eps - step * direction, inner_cfg, d, warm_start, layers).value
        parts.append((up - down) / (2.0 * step))
    return parts[0], parts[1]


def find_eigenvalue(
    m: ComplexMatrix,
    eps0: complex,
    inner_cfg: GDConfig,
    outer_cfg: GDConfig,
    d: float,
    accept_tol: Optional[float] = None,
    real_axis: bool = False,
    layers: int = 3,
    warm_start: Optional[AnsatzParams] = None,
    stop_below: Optional[float] = None,
    avoid: Sequence[complex] = (),
    avoid_radius: float = 0.0,
) -> OuterResult:
    """
    Descend g(ε) from eps0. accepted ⇔ final residual < accept_tol
    (default 1e-8 · max(1, ‖M‖_F²)). real_axis pins Im ε at Im eps0.
    warm_start seeds the first inner solve, which then skips its restarts.

    stop_below ends the descent as soon as the residual drops under it.
    A step landing within avoid_radius of any value in avoid ends the run
    with abandoned=True and accepted=False.
    """
    m = _square(m)
    if not d > 0:
        raise DomainError("pad value d must be positive", d=d)
    tau = accept_tol if accept_tol is not None else accept_threshold(m)
    warm_cfg = inner_cfg.model_copy(update={"restarts": 0})
    scale = max(1.0, frobenius_norm(m) ** 2)

    first_cfg = inner_cfg if warm_start is None else warm_cfg
    current = _inner_at(m, eps0, first_cfg, d, warm_start, layers)
    x = np.array([complex(eps0).real, complex(eps0).imag])
    value = current.value
    trace: List[Tuple[complex, float]] = [(complex(eps0), value)]

    def objective(point: np.ndarray):
        result = _inner_at(m, complex(point[0], point[1]), warm_cfg, d, current.theta_star, layers)
        return result.value, result

    known = np.array([complex(v) for v in avoid], dtype=np.complex128)

    def low_enough() -> bool:
        return stop_below is not None and value < stop_below

    def near_known(eps: complex) -> bool:
        return known.size > 0 and bool(np.min(np.abs(known - eps)) < avoid_radius)

    trial = outer_cfg.learning_rate
    converged = low_enough()
    abandoned = False
    iterations = 0
    while not converged and iterations < outer_cfg.max_iterations:
        iterations += 1
        eps = complex(x[0], x[1])
        if current.converged:
            grad = np.array(envelope_gradient(m, eps, current.psi_min))
        else:
            grad = np.array(outer_finite_difference_gradient(
                m, eps, warm_cfg, d, outer_cfg.fd_step, current.theta_star, layers,
            ))
        if real_axis:
            grad[1] = 0.0
        if np.max(np.abs(grad)) < outer_cfg.gradient_tolerance:
            converged = True
            break

        step = backtrack(objective, x, value, grad, trial, outer_cfg)
        if step is None:
            converged = True
            break
        decrease = value - step.value
        x, value, current = step.point, step.value, step.payload
        trace.append((complex(x[0], x[1]), value))
        if near_known(complex(x[0], x[1])):
            abandoned = True
            break
        if low_enough() or decrease <= outer_cfg.value_tolerance * scale:
            converged = True
            break
        trial = next_trial(step.size, outer_cfg)

    epsilon_star = complex(x[0], x[1])
    accepted = value < tau and not abandoned
    if abandoned:
        log.debug(f"⏭️ [vqe] start {complex(eps0):.4g} ran into a known value near {epsilon_star:.6g}")
    else:
        log.info(
            f"{'✅' if accepted else '⚠️'} [vqe] ε={epsilon_star:.6g} residual={value:.3e} "
            f"after {iterations} outer steps (start {complex(eps0):.4g})"
        )
    return OuterResult(
        epsilon_star=epsilon_star,
        residual=value,
        trace=trace,
        accepted=accepted,
        inner=current,
        iterations=iterations,
        converged=converged,
        abandoned=abandoned,
    )
