"""
Cyclic complex Jacobi eigenvalue solver for Hermitian matrices.

Each rotation zeroes a[p, q] with the unitary
    G = diag(1, e^{-iφ}) · [[c, s], [-s, c]],   a[p, q] = |a[p, q]| e^{iφ}
i.e. a phase that makes the pivot real followed by the classical real
rotation (t = sgn θ / (|θ| + √(θ²+1)), θ = (a_qq − a_pp) / 2|a_pq|).
Sweeps run until the off-diagonal Frobenius norm drops below
1e−12 · ‖H‖_F.
"""
from __future__ import annotations

import math
from typing import List

import numpy as np

from vqe_kernel.errors import ConvergenceError, DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, is_hermitian
from vqe_kernel.oracle.charpoly import MAX_DIM

HERMITIAN_TOL = 1e-10
OFF_DIAGONAL_FACTOR = 1e-12
MAX_SWEEPS = 100


def _off_norm(a: np.ndarray) -> float:
    # summed entry by entry; ‖A‖² − ‖diag A‖² cancels to ~√ε·‖A‖
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    magnitude = abs(apq)
    phase = apq / magnitude
    theta = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=np.complex128)
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = np.conj(g).T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def hermitian_eig_reference(h: ComplexMatrix) -> List[float]:
    """All eigenvalues of a Hermitian matrix, ascending."""
    a = as_matrix(h)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ShapeError(f"hermitian_eig_reference needs a square matrix, got {a.shape}", shape=a.shape)
    if n > MAX_DIM:
        raise DomainError(f"hermitian_eig_reference is limited to n ≤ {MAX_DIM}", n=n)
    scale = float(np.linalg.norm(a))
    if not is_hermitian(a, HERMITIAN_TOL * max(1.0, scale)):
        raise DomainError("hermitian_eig_reference needs a Hermitian matrix")

    a = 0.5 * (a + np.conj(a).T)
    target = OFF_DIAGONAL_FACTOR * scale
    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 0.0:
                    _rotate(a, p, q)
    else:
        if _off_norm(a) > target:
            raise ConvergenceError(
                "Jacobi sweeps did not converge",
                best_iterate=sorted(np.diag(a).real.tolist()),
            )
    return sorted(float(x) for x in np.diag(a).real)
