# vqe_kernel/linalg/dense.py
"""
Dense complex arithmetic
──────────────────────────────────────────────
Thin, shape-checked wrappers over numpy complex128 arrays. Every other
module goes through these so that shape mismatches surface as ShapeError
and NaN/Inf never leave a public operation.
──────────────────────────────────────────────
"""
from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from vqe_kernel.errors import DomainError, ShapeError

ComplexMatrix = NDArray[np.complex128]
ComplexVector = NDArray[np.complex128]


# ──────────────────────────────────────────────
# Coercion
# ──────────────────────────────────────────────
def as_matrix(data: Any) -> ComplexMatrix:
    """Copy `data` into a finite 2-D complex128 array."""
    m = np.array(data, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {m.shape}", shape=m.shape)
    _ensure_finite(m)
    return m


def as_vector(data: Any) -> ComplexVector:
    v = np.array(data, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] == 0:
        raise ShapeError(f"expected a non-empty vector, got shape {v.shape}", shape=v.shape)
    _ensure_finite(v)
    return v


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=np.complex128)


def _ensure_finite(a: np.ndarray) -> None:
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix contains NaN or Inf entries")


def _require_square(m: np.ndarray, op: str) -> None:
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"{op} needs a square matrix, got {m.shape[0]}x{m.shape[1]}", shape=m.shape)


# ──────────────────────────────────────────────
# Operations
# ──────────────────────────────────────────────
def adjoint(m: ComplexMatrix) -> ComplexMatrix:
    return np.ascontiguousarray(np.conj(as_matrix(m)).T)


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}", left=a.shape, right=b.shape)
    return a @ b


def matvec(m: ComplexMatrix, v: ComplexVector) -> ComplexVector:
    m, v = as_matrix(m), as_vector(v)
    if m.shape[1] != v.shape[0]:
        raise ShapeError(f"cannot apply {m.shape} matrix to dimension {v.shape[0]}", left=m.shape, right=v.shape)
    return m @ v


def inner_product(u: ComplexVector, v: ComplexVector) -> complex:
    """Σ conj(u_i)·v_i (conjugate-linear in the first argument)."""
    u, v = as_vector(u), as_vector(v)
    if u.shape != v.shape:
        raise ShapeError(f"dimension mismatch {u.shape[0]} vs {v.shape[0]}", left=u.shape, right=v.shape)
    return complex(np.vdot(u, v))


def frobenius_norm(m: ComplexMatrix) -> float:
    return float(np.linalg.norm(as_matrix(m)))


def is_hermitian(m: ComplexMatrix, tol: float = 0.0) -> bool:
    m = as_matrix(m)
    _require_square(m, "is_hermitian")
    if tol < 0:
        raise DomainError("tolerance must be non-negative", tol=tol)
    return bool(np.max(np.abs(m - np.conj(m).T)) <= tol)


def is_real(m: ComplexMatrix, tol: float = 0.0) -> bool:
    return bool(np.max(np.abs(np.asarray(m).imag), initial=0.0) <= tol)
