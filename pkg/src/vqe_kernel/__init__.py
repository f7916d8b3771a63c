# vqe_kernel/__init__.py
"""
vqe_kernel
──────────────────────────────────────────────────────────────
Eigenvalues of non-Hermitian matrices with a simulated variational
quantum eigensolver.
Provides:
    - Hermitian proxies H(ε) = (M − εI)†(M − εI), padded to qubit registers
    - Exact statevector simulation of the trial circuits
    - Nested gradient descents over circuit angles θ and spectral shift ε
    - Full-spectrum grid search with conjugate completion
    - Classical reference solvers (characteristic polynomial, Jacobi)
    - Lorenz-system equilibria, Jacobians and stability classes
    - ε-plane heatmaps as CSV
──────────────────────────────────────────────────────────────
"""

__version__ = "0.1.0"

from vqe_kernel.lorenz import LorenzParams, classify_stability, equilibria, jacobian
from vqe_kernel.spectrum import SpectrumReport, find_spectrum, search_bounds
from vqe_kernel.vqe import find_eigenvalue, minimize_expectation

__all__ = [
    "LorenzParams",
    "SpectrumReport",
    "classify_stability",
    "equilibria",
    "find_eigenvalue",
    "find_spectrum",
    "jacobian",
    "minimize_expectation",
    "search_bounds",
]
