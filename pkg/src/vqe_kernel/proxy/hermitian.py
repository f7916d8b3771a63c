# vqe_kernel/proxy/hermitian.py
"""
Hermitian proxies of non-Hermitian matrices
──────────────────────────────────────────────
    • hermitianize  → H(ε) = (M − εI)†(M − εI)      (PSD, min-eig 0 ⇔ ε ∈ σ(M))
    • augment       → pad to 2^q × 2^q with d on the new diagonal
    • default_pad   → a d guaranteed to sit above every plotted/searched H(ε)
    • svd_proxy     → M†M, eigenvalues = squared singular values
    • build_proxy   → the full HermitianProxy record for one ε
──────────────────────────────────────────────
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, frobenius_norm, identity, is_hermitian

HERMITIAN_TOL = 1e-10


@dataclass(frozen=True)
class HermitianProxy:
    """
    H(ε) padded to a qubit register.

    Attributes
    ----------
    matrix : ComplexMatrix
        2^q × 2^q Hermitian PSD matrix.
    epsilon : complex
        Spectral shift ε.
    pad_value : float
        Diagonal term d on the padded rows/cols.
    original_dim : int
        n, the dimension of the matrix the proxy was built from.
    qubits : int
        q.
    """

    matrix: ComplexMatrix
    epsilon: complex
    pad_value: float
    original_dim: int
    qubits: int


def _hermitian_part(h: np.ndarray) -> np.ndarray:
    return 0.5 * (h + np.conj(h).T)


def qubits_for(n: int) -> int:
    """Smallest q ≥ 1 with 2^q ≥ n."""
    if n < 1:
        raise ShapeError("dimension must be positive", n=n)
    return max(1, math.ceil(math.log2(n)))


def hermitianize(m: ComplexMatrix, eps: complex) -> ComplexMatrix:
    m = as_matrix(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ShapeError(f"hermitianize needs a square matrix, got {m.shape}", shape=m.shape)
    shifted = m - complex(eps) * identity(n)
    return _hermitian_part(np.conj(shifted).T @ shifted)


def augment(h: ComplexMatrix, d: float) -> ComplexMatrix:
    """Embed H in the leading corner of a 2^q matrix with d on the padded diagonal."""
    if not d > 0:
        raise DomainError("pad value d must be positive", d=d)
    h = as_matrix(h)
    n = h.shape[0]
    if h.shape[1] != n:
        raise ShapeError(f"augment needs a square matrix, got {h.shape}", shape=h.shape)
    if not is_hermitian(h, HERMITIAN_TOL * max(1.0, frobenius_norm(h))):
        raise DomainError("augment needs a Hermitian matrix")

    size = 2 ** qubits_for(n)
    if size == n:
        return h
    out = np.zeros((size, size), dtype=np.complex128)
    out[:n, :n] = h
    out[np.arange(n, size), np.arange(n, size)] = d
    return out


def default_pad(m: ComplexMatrix, search_radius: float) -> float:
    """(‖M‖_F + r)² + 1, which exceeds σ_min(M − εI)² for every |ε| ≤ r."""
    if search_radius < 0:
        raise DomainError("search radius must be non-negative", search_radius=search_radius)
    return (frobenius_norm(m) + search_radius) ** 2 + 1.0


def svd_proxy(m: ComplexMatrix) -> ComplexMatrix:
    m = as_matrix(m)
    return _hermitian_part(np.conj(m).T @ m)


def build_proxy(m: ComplexMatrix, eps: complex, d: float) -> HermitianProxy:
    m = as_matrix(m)
    n = m.shape[0]
    return HermitianProxy(
        matrix=augment(hermitianize(m, eps), d),
        epsilon=complex(eps),
        pad_value=float(d),
        original_dim=n,
        qubits=qubits_for(n),
    )
