# vqe_kernel/oracle/charpoly.py
"""
Characteristic polynomial + all-roots solver
──────────────────────────────────────────────
    • char_poly   → Faddeev–LeVerrier trace recurrence (monic, n ≤ 16)
    • poly_roots  → Durand–Kerner simultaneous iteration

Both are deliberately independent of numpy.linalg eigen-routines and of the
variational code path; they are the ground truth the VQE is checked against.
──────────────────────────────────────────────
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from vqe_kernel.errors import ConvergenceError, DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, identity
from vqe_kernel.log import get_logger

log = get_logger("oracle")

MAX_DIM = 16
ROOT_TOLERANCE = 1e-13
RESIDUAL_FACTOR = 1e-8
DK_SEED = 0.4 + 0.9j


@dataclass(frozen=True)
class CharPoly:
    """
    Monic polynomial λⁿ + c₁λⁿ⁻¹ + … + cₙ.

    Attributes
    ----------
    degree : int
        n, the matrix dimension it came from.
    coefficients : tuple[complex, ...]
        c₁ … cₙ (the leading 1 is implicit).
    """

    degree: int
    coefficients: Tuple[complex, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.degree:
            raise ShapeError(
                f"degree {self.degree} polynomial needs {self.degree} coefficients",
                got=len(self.coefficients),
            )

    def monic(self) -> np.ndarray:
        """Coefficients highest power first, leading 1 included (np.polyval order)."""
        return np.concatenate(([1.0 + 0j], np.asarray(self.coefficients, dtype=np.complex128)))

    def evaluate(self, lam) -> complex | np.ndarray:
        return np.polyval(self.monic(), lam)

    def scale(self) -> float:
        return float(np.max(np.abs(self.coefficients), initial=0.0))


def char_poly(m: ComplexMatrix) -> CharPoly:
    """M₁=M, c₁=−tr M;  Mₖ₊₁=M(Mₖ+cₖI), cₖ₊₁=−tr(Mₖ₊₁)/(k+1)."""
    m = as_matrix(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ShapeError(f"char_poly needs a square matrix, got {m.shape}", shape=m.shape)
    if n > MAX_DIM:
        raise DomainError(f"char_poly is limited to n ≤ {MAX_DIM}", n=n)

    eye = identity(n)
    mk = m.copy()
    ck = -np.trace(mk)
    coefficients: List[complex] = [complex(ck)]
    for k in range(1, n):
        mk = m @ (mk + ck * eye)
        ck = -np.trace(mk) / (k + 1)
        coefficients.append(complex(ck))
    return CharPoly(degree=n, coefficients=tuple(coefficients))


def poly_roots(p: CharPoly, max_iterations: int = 1000) -> List[complex]:
    """
    All n roots by Durand–Kerner.

    The iteration runs on the polynomial rescaled to unit root radius (a
    Fujiwara bound), starting from (0.4+0.9i)^k, and stops once every
    per-root update is below 1e−13 in the rescaled variable. Repeated roots
    converge only linearly; if the budget runs out but every residual is
    already within bound the roots are returned with a warning, otherwise a
    ConvergenceError carries the best iterate.
    """
    if p.degree < 1:
        raise DomainError("poly_roots needs degree ≥ 1")

    n = p.degree
    coeffs = np.asarray(p.coefficients, dtype=np.complex128)
    powers = np.arange(1, n + 1)
    radius = 2.0 * float(np.max(np.abs(coeffs) ** (1.0 / powers)))
    if radius == 0.0:
        return [0j] * n

    scaled = np.concatenate(([1.0 + 0j], coeffs / radius ** powers))
    z = DK_SEED ** np.arange(n, dtype=np.complex128)

    converged = False
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        delta = np.polyval(scaled, z) / diff.prod(axis=1)
        z = z - delta
        if not np.all(np.isfinite(z)):
            raise ConvergenceError("Durand–Kerner diverged", best_iterate=None, iterations=iterations)
        if np.max(np.abs(delta)) < ROOT_TOLERANCE:
            converged = True
            break

    roots = z * radius
    if not converged:
        residual = float(np.max(np.abs(p.evaluate(roots))))
        bound = RESIDUAL_FACTOR * (1.0 + p.scale())
        if residual > bound:
            raise ConvergenceError(
                f"Durand–Kerner did not converge in {max_iterations} iterations",
                best_iterate=[complex(r) for r in roots],
                residual=residual,
            )
        log.warning(f"⚠️ [oracle] Durand–Kerner hit {max_iterations} iterations (repeated roots?); residual {residual:.2e} accepted")
    else:
        log.debug(f"🔎 [oracle] Durand–Kerner converged in {iterations} iterations")

    return sorted((complex(r) for r in roots), key=lambda r: (r.real, r.imag))
