# vqe_kernel/vqe/inner.py
"""
Inner loop: minimise ⟨Ψ(θ)|H|Ψ(θ)⟩ over θ
──────────────────────────────────────────────
Gradient descent with central finite differences (step fd_step) and Armijo
backtracking. A run ends when
    • max |∂f/∂θ_k| < gradient_tolerance                 (converged)
    • no trial step gives sufficient decrease            (stalled: numerically stationary)
    • a step decreases f by ≤ value_tolerance·max(1,‖H‖_F) (stalled)
    • max_iterations accepted steps                      (not converged)
Restarts draw fresh θ ~ U[0, 2π) from the seeded generator and descend
alongside the warm start in one batch; the lowest final value wins.
──────────────────────────────────────────────
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from vqe_kernel.ansatz import AnsatzParams, Circuit, Statevector, batch_expectation, circuit_for
from vqe_kernel.config import GDConfig
from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, is_hermitian
from vqe_kernel.log import get_logger
from vqe_kernel.vqe.linesearch import backtrack_runs, next_trial

log = get_logger("vqe")

HERMITIAN_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class InnerResult:
    theta_star: AnsatzParams
    value: float
    psi_min: Statevector
    iterations: int
    converged: bool
    # objective after each accepted step of the winning run
    history: Tuple[float, ...] = ()


@dataclass(frozen=True)
class _Run:
    theta: np.ndarray
    value: float
    iterations: int
    converged: bool
    history: Tuple[float, ...]


def fd_gradients(objective, xs: np.ndarray, step: float) -> np.ndarray:
    """Central differences at every row of xs, all in one objective call."""
    runs, n = xs.shape
    shifts = step * np.eye(n)
    plus = (xs[:, None, :] + shifts[None, :, :]).reshape(runs * n, n)
    minus = (xs[:, None, :] - shifts[None, :, :]).reshape(runs * n, n)
    values = objective(np.vstack((plus, minus)))
    return (values[: runs * n] - values[runs * n:]).reshape(runs, n) / (2.0 * step)


def fd_gradient(objective, x: np.ndarray, step: float) -> np.ndarray:
    return fd_gradients(objective, x[None, :], step)[0]


def _descend(objective, x0s: np.ndarray, cfg: GDConfig, scale: float) -> List[_Run]:
    """Gradient descent from every row of x0s; the runs advance in lockstep."""
    runs = x0s.shape[0]
    xs = x0s.copy()
    values = np.array(objective(xs), dtype=np.float64)
    trials = np.full(runs, cfg.learning_rate)
    floor = cfg.value_tolerance * scale

    done = np.zeros(runs, dtype=bool)
    converged = np.zeros(runs, dtype=bool)
    iterations = np.full(runs, cfg.max_iterations)
    history: List[List[float]] = [[] for _ in range(runs)]

    for iteration in range(cfg.max_iterations):
        active = np.flatnonzero(~done)
        if active.size == 0:
            break
        grads = fd_gradients(objective, xs[active], cfg.fd_step)
        flat = np.max(np.abs(grads), axis=1) < cfg.gradient_tolerance
        for run in active[flat]:
            done[run], converged[run], iterations[run] = True, True, iteration
        active, grads = active[~flat], grads[~flat]
        if active.size == 0:
            continue

        sizes, points, new_values = backtrack_runs(
            objective, xs[active], values[active], grads, trials[active], cfg,
        )
        for k, run in enumerate(active):
            if np.isnan(sizes[k]):
                done[run], converged[run], iterations[run] = True, True, iteration
                continue
            decrease = values[run] - new_values[k]
            xs[run], values[run] = points[k], new_values[k]
            history[run].append(float(new_values[k]))
            if decrease <= floor:
                done[run], converged[run], iterations[run] = True, True, iteration + 1
            else:
                trials[run] = next_trial(float(sizes[k]), cfg)

    return [
        _Run(xs[r], float(values[r]), int(iterations[r]), bool(converged[r]), tuple(history[r]))
        for r in range(runs)
    ]


def _check_hamiltonian(h: ComplexMatrix) -> ComplexMatrix:
    h = as_matrix(h)
    size = h.shape[0]
    if h.shape[1] != size or size < 2 or size & (size - 1):
        raise ShapeError(f"Hamiltonian must be 2^q x 2^q, got {h.shape}", shape=h.shape)
    if not is_hermitian(h, HERMITIAN_TOL * max(1.0, float(np.linalg.norm(h)))):
        raise DomainError("minimize_expectation needs a Hermitian matrix")
    return h


def minimize_expectation(
    h: ComplexMatrix,
    cfg: GDConfig,
    warm_start: Optional[AnsatzParams] = None,
    circuit: Optional[Circuit] = None,
    layers: int = 3,
) -> InnerResult:
    h = _check_hamiltonian(h)
    qubits = h.shape[0].bit_length() - 1
    circuit = circuit or circuit_for(qubits, layers)
    if circuit.qubits != qubits:
        raise ShapeError(f"circuit acts on {circuit.qubits} qubits, Hamiltonian on {qubits}")

    def objective(thetas: np.ndarray) -> np.ndarray:
        return batch_expectation(circuit.batch_states(thetas), h)

    rng = np.random.default_rng(cfg.rng_seed)
    starts = []
    if warm_start is not None:
        if len(warm_start) != circuit.n_params:
            raise ShapeError(
                f"warm start has {len(warm_start)} angles, circuit takes {circuit.n_params}",
                expected=circuit.n_params,
            )
        starts.append(warm_start.array())
    while len(starts) < cfg.restarts + 1:
        starts.append(rng.uniform(0.0, 2.0 * np.pi, circuit.n_params))

    scale = max(1.0, float(np.linalg.norm(h)))
    runs = _descend(objective, np.vstack(starts), cfg, scale)
    # first run wins ties, so the warm start is kept when nothing beats it
    best = min(runs, key=lambda run: run.value)
    psi = circuit.batch_states(best.theta)[0]
    psi = psi / np.linalg.norm(psi)
    value = float(batch_expectation(psi[None, :], h)[0])
    if not best.converged:
        log.debug(f"⚠️ [vqe] inner loop hit {cfg.max_iterations} iterations at value {value:.3e}")
    return InnerResult(
        theta_star=AnsatzParams.of(best.theta),
        value=value,
        psi_min=Statevector(psi),
        iterations=best.iterations,
        converged=best.converged,
        history=best.history,
    )
