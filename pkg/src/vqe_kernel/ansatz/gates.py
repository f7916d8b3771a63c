"""Batched single- and two-qubit gate matrices (leading axes are batch axes)."""
from __future__ import annotations

import numpy as np

I4 = np.eye(4, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
XX = np.kron(X, X)
YY = np.kron(Y, Y)
ZZ = np.kron(Z, Z)


def euler(a, b, c) -> np.ndarray:
    """Rz(a)·Ry(b)·Rz(c), with Rz(t)=diag(e^{-it/2}, e^{it/2}) and Ry(t)=exp(-itY/2)."""
    a, b, c = np.broadcast_arrays(
        np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64), np.asarray(c, dtype=np.float64)
    )
    cb, sb = np.cos(0.5 * b), np.sin(0.5 * b)
    plus = np.exp(-0.5j * (a + c))
    minus = np.exp(-0.5j * (a - c))
    out = np.empty(a.shape + (2, 2), dtype=np.complex128)
    out[..., 0, 0] = plus * cb
    out[..., 0, 1] = -minus * sb
    out[..., 1, 0] = np.conj(minus) * sb
    out[..., 1, 1] = np.conj(plus) * cb
    return out


def pauli_exp(angle, pauli: np.ndarray) -> np.ndarray:
    """exp(i·angle·P) = cos(angle)·I + i·sin(angle)·P for an involutory P."""
    angle = np.asarray(angle, dtype=np.float64)[..., None, None]
    return np.cos(angle) * np.eye(pauli.shape[0]) + 1j * np.sin(angle) * pauli


def interaction(alpha, beta, gamma) -> np.ndarray:
    """N = exp(iαX⊗X)·exp(iβY⊗Y)·exp(iγZ⊗Z); the three factors commute."""
    return pauli_exp(alpha, XX) @ pauli_exp(beta, YY) @ pauli_exp(gamma, ZZ)
